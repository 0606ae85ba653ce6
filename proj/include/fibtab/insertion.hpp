#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "fibtab/colored_permutation.hpp"
#include "fibtab/error.hpp"
#include "fibtab/tableau.hpp"

// The k-ribbon Fibonacci insertion.  Element x^j enters P as a ribbon of
// height j at the leftmost column: larger than the bottom label there, it
// opens a new column; smaller, it stacks on top (re-forcing that bottom to
// height k+1-j) and the displaced top carries on into the suffix.  Q records,
// at the position where the cascade stopped, a single of the same height
// (column creation) or a top over its untouched bottom (stacking) labelled by
// the step number.  The recording tableau keeps the heights that P's
// re-forcing discards, which is what makes the algorithm reversible.

namespace fibtab {

struct insertion_pair {
  tableau p;
  tableau q;
};

inline void insert_step(tableau& p, tableau& q, int value, int color, int step) {
  const int k = p.k;
  if (color < 1 || color > k)
    throw error("insert_step: colour " + std::to_string(color) + " out of 1.." + std::to_string(k),
                step);
  for (const column& c : p.cols)
    if (c.bottom_label() == value || (c.is_double() && c.top_label() == value))
      throw error("insert_step: value " + std::to_string(value) + " already present", step);

  int carried_v = value;
  int carried_h = color;
  int pos = 0;
  while (true) {
    if (pos == p.column_count()) {  // ran past the last column: append
      p.cols.push_back(column::single(carried_h, carried_v));
      q.cols.push_back(column::single(carried_h, step));
      return;
    }
    column& target = p.cols[pos];
    if (carried_v > target.bottom_label()) {  // new column in front of this stack
      p.cols.insert(p.cols.begin() + pos, column::single(carried_h, carried_v));
      q.cols.insert(q.cols.begin() + pos, column::single(carried_h, step));
      return;
    }
    if (target.is_double()) {  // stack here, bump the old top rightward
      const int bumped_v = target.top_label();
      const int bumped_h = target.top_height();
      target = column::stacked(carried_h, carried_v, target.bottom_label());
      carried_v = bumped_v;
      carried_h = bumped_h;
      ++pos;
    } else {  // stack onto a single: cascade ends
      target = column::stacked(carried_h, carried_v, target.bottom_label());
      const column qcol = q.cols[pos];
      q.cols[pos] = column::stacked(k + 1 - qcol.single_height(), step, qcol.bottom_label());
      return;
    }
  }
}

inline insertion_pair insert(const colored_permutation& perm) {
  validate(perm);
  insertion_pair r{tableau(perm.k), tableau(perm.k)};
  for (int i = 0; i < perm.size(); ++i)
    insert_step(r.p, r.q, perm.entries[i].value, perm.entries[i].color, i + 1);
  return r;
}

struct uninsert_result {
  int value = 0;
  int color = 0;
};

// Reverses one insertion step.  Q's maximum label locates the most recently
// created ribbon; removing it starts a leftward cascade in P in which each
// displaced top keeps its height and each receiving bottom is re-forced,
// until column 1's top (or the lone single) pops out as the inserted element.
inline uninsert_result uninsert_step(tableau& p, tableau& q) {
  const int k = p.k;
  const int step = q.ribbons();
  if (p.empty() || q.empty()) throw error("uninsert_step: empty tableau pair", step);
  if (shape_word(p) != shape_word(q)) throw error("uninsert_step: shape mismatch", step);

  int max_label = 0, max_col = -1;
  bool max_on_top = false;
  for (int i = 0; i < q.column_count(); ++i) {
    const column& c = q.cols[i];
    if (c.bottom_label() > max_label) {
      max_label = c.bottom_label();
      max_col = i;
      max_on_top = false;
    }
    if (c.is_double() && c.top_label() > max_label) {
      max_label = c.top_label();
      max_col = i;
      max_on_top = true;
    }
  }

  int carried_v = 0, carried_h = 0;
  int pos = max_col;
  if (max_on_top) {  // the step ended by stacking onto a single
    const column qc = q.cols[max_col];
    const column pc = p.cols[max_col];
    const int g = qc.bottom_height(k);  // the height this column was created with
    q.cols[max_col] = column::single(g, qc.bottom_label());
    p.cols[max_col] = column::single(g, pc.bottom_label());
    carried_v = pc.top_label();
    carried_h = pc.top_height();
  } else {  // the step ended by creating this single column
    const column pc = p.cols[max_col];
    if (pc.is_double()) throw error("uninsert_step: inconsistent pair", step);
    carried_v = pc.bottom_label();
    carried_h = pc.single_height();
    p.cols.erase(p.cols.begin() + max_col);
    q.cols.erase(q.cols.begin() + max_col);
  }
  for (--pos; pos >= 0; --pos) {
    column& c = p.cols[pos];
    if (!c.is_double())
      throw error("uninsert_step: cascade through a single column; invalid pair", step);
    const int displaced_v = c.top_label();
    const int displaced_h = c.top_height();
    c = column::stacked(carried_h, carried_v, c.bottom_label());
    carried_v = displaced_v;
    carried_h = displaced_h;
  }
  return {carried_v, carried_h};
}

inline colored_permutation uninsert(tableau p, tableau q) {
  const int n = q.ribbons();
  if (p.ribbons() != n) throw error("uninsert: tableaux of different sizes");
  colored_permutation perm(p.k);
  perm.entries.resize(n);
  for (int step = n; step >= 1; --step) {
    uninsert_result r = uninsert_step(p, q);
    perm.entries[step - 1] = {r.value, r.color};
  }
  validate(perm);
  return perm;
}

}  // namespace fibtab

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "fibtab/error.hpp"
#include "fibtab/tableau.hpp"

// Evacuation of standard k-ribbon Fibonacci tableaux.  One iteration erases
// the bottom ribbon of the leftmost column (the largest label) and walks the
// hole rightward: while a top ribbon a sits above the hole, a slides down
// (keeping its height) if it beats the next column's bottom label b, else b
// fills the hole and the hole moves under column c+1.  The iteration ends at
// an empty top ribbon (the column becomes a single) or an emptied single
// column (removed, suffix slides left).  Writing n, n-1, ... into the ending
// positions of successive iterations yields a path tableau of the same shape;
// the stacks of ev(P) carry the height-swapped tiling of the stacks of P.

namespace fibtab {

struct evacuation_step {
  int column = 0;  // 1-based position, in the tableau the iteration started from
  int height = 0;  // height of the reported empty ribbon
  bool top_ribbon = false;  // true: empty top of a stack; false: removed single column
};

inline evacuation_step evacuate_iteration(tableau& t) {
  if (t.empty()) throw error("evacuate_iteration: empty tableau");
  if (!is_standard(t)) throw error("evacuate_iteration: input is not standard");
  const int k = t.k;
  int c = 0;  // column whose bottom ribbon is the hole
  while (true) {
    const column col = t.cols[c];
    if (col.is_double()) {
      const int a = col.top_label();
      const int ha = col.top_height();
      const bool slide = (c + 1 == t.column_count()) || a > t.cols[c + 1].bottom_label();
      if (slide) {
        t.cols[c] = column::single(ha, a);
        return {c + 1, k + 1 - ha, true};
      }
      t.cols[c] = column::stacked(ha, a, t.cols[c + 1].bottom_label());
      ++c;
    } else {
      const int h = col.single_height();
      t.cols.erase(t.cols.begin() + c);
      return {c + 1, h, false};
    }
  }
}

// One iteration of the inverse: strip the ribbon labelled 1, decrement the
// remaining labels, and either report the emptied single column or slide the
// surviving top down, report the vacated top ribbon, and cycle the labels in
// that column and everything to its right (the smallest becomes the largest,
// every other label moves to the next smaller one).
inline evacuation_step unevacuate_iteration(tableau& t) {
  if (t.empty()) throw error("unevacuate_iteration: empty tableau");
  const int k = t.k;
  int c = -1;
  bool on_top = false;
  for (int j = 0; j < t.column_count() && c < 0; ++j) {
    if (t.cols[j].bottom_label() == 1) c = j;
    if (t.cols[j].is_double() && t.cols[j].top_label() == 1) {
      c = j;
      on_top = true;
    }
  }
  if (c < 0 || on_top)
    throw error("unevacuate_iteration: label 1 missing or on top of a stack; not a path tableau");

  auto decrement_all = [&] {
    for (column& col : t.cols) {
      if (col.is_double())
        col = column::stacked(col.top_height(), col.top_label() - 1, col.bottom_label() - 1);
      else
        col = column::single(col.single_height(), col.bottom_label() - 1);
    }
  };

  if (!t.cols[c].is_double()) {
    const int h = t.cols[c].single_height();
    t.cols.erase(t.cols.begin() + c);
    decrement_all();
    return {c + 1, h, false};
  }

  const int j = t.cols[c].top_height();
  t.cols[c] = column::single(j, t.cols[c].top_label());
  decrement_all();
  std::vector<int> labels;
  for (int i = c; i < t.column_count(); ++i) {
    labels.push_back(t.cols[i].bottom_label());
    if (t.cols[i].is_double()) labels.push_back(t.cols[i].top_label());
  }
  std::sort(labels.begin(), labels.end());
  auto shifted = [&](int v) {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    return it == labels.begin() ? labels.back() : *(it - 1);
  };
  for (int i = c; i < t.column_count(); ++i) {
    column& col = t.cols[i];
    if (col.is_double())
      col = column::stacked(col.top_height(), shifted(col.top_label()),
                            shifted(col.bottom_label()));
    else
      col = column::single(col.single_height(), shifted(col.bottom_label()));
  }
  return {c + 1, k + 1 - j, true};
}

namespace detail {

struct ribbon_record {
  int label = 0;
  int height = 0;
};

// Assemble a tableau over the shape of `shape_of`, one record per ribbon.
inline tableau assemble(const tableau& shape_of, const std::vector<ribbon_record>& bottom,
                        const std::vector<ribbon_record>& top) {
  tableau out(shape_of.k);
  for (int i = 0; i < shape_of.column_count(); ++i) {
    if (shape_of.cols[i].is_double()) {
      if (top[i].label == 0 || bottom[i].label == 0)
        throw error("evacuation: stack column received no record", i + 1);
      if (top[i].height + bottom[i].height != shape_of.k + 1)
        throw error("evacuation: stack heights do not sum to k+1", i + 1);
      out.cols.push_back(column::stacked(top[i].height, top[i].label, bottom[i].label));
    } else {
      if (bottom[i].label == 0) throw error("evacuation: column received no record", i + 1);
      out.cols.push_back(column::single(bottom[i].height, bottom[i].label));
    }
  }
  return out;
}

}  // namespace detail

inline tableau evacuate(const tableau& p) {
  validate(p);
  if (!is_standard(p)) throw error("evacuate: input is not standard");
  const int n = p.ribbons();
  tableau cur = p;
  std::vector<int> origin(cur.column_count());
  std::iota(origin.begin(), origin.end(), 0);
  std::vector<detail::ribbon_record> bottom(p.column_count()), top(p.column_count());
  for (int label = n; label >= 1; --label) {
    evacuation_step st = evacuate_iteration(cur);
    const int oc = origin[st.column - 1];
    if (st.top_ribbon) {
      top[oc] = {label, st.height};
    } else {
      bottom[oc] = {label, st.height};
      origin.erase(origin.begin() + st.column - 1);
    }
  }
  return detail::assemble(p, bottom, top);
}

inline tableau unevacuate(const tableau& t) {
  validate(t);
  if (!is_path(t)) throw error("unevacuate: input is not a path tableau");
  const int n = t.ribbons();
  tableau cur = t;
  std::vector<int> origin(cur.column_count());
  std::iota(origin.begin(), origin.end(), 0);
  std::vector<detail::ribbon_record> bottom(t.column_count()), top(t.column_count());
  for (int i = 1; i <= n; ++i) {
    evacuation_step st = unevacuate_iteration(cur);
    const int oc = origin[st.column - 1];
    if (st.top_ribbon) {
      top[oc] = {i, st.height};
    } else {
      bottom[oc] = {i, st.height};
      origin.erase(origin.begin() + st.column - 1);
    }
  }
  tableau out = detail::assemble(t, bottom, top);
  if (!is_standard(out)) throw error("unevacuate: result is not standard; invalid input");
  return out;
}

}  // namespace fibtab

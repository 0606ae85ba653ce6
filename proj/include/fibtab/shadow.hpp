#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "fibtab/colored_permutation.hpp"
#include "fibtab/error.hpp"
#include "fibtab/insertion.hpp"
#include "fibtab/tableau.hpp"

// Shadow lines of a square diagram: repeatedly pair the highest remaining X
// with the rightmost remaining X (they may coincide).  Line i determines
// column i of the insertion tableau P directly: a lone X of colour j in row r
// gives a single of height j labelled r; a two-X line puts the lower row
// number in a ribbon of the rightmost X's colour stacked over the higher row
// number.  Because the higher X's colour and column never enter P, whole
// families of permutations share one P; the positional moves below generate
// the family reachable with all colours held fixed.

namespace fibtab {

struct shadow_point {
  int column = 0;
  int row = 0;
  int color = 0;

  friend bool operator==(const shadow_point&, const shadow_point&) = default;
};

struct shadow_line {
  shadow_point high;   // highest-row X on the line
  shadow_point right;  // rightmost-column X on the line

  bool single() const { return high == right; }

  friend bool operator==(const shadow_line&, const shadow_line&) = default;
};

inline std::vector<shadow_line> shadow_lines(const colored_permutation& p) {
  validate(p);
  std::vector<shadow_point> remaining;
  for (int i = 0; i < p.size(); ++i)
    remaining.push_back({i + 1, p.entries[i].value, p.entries[i].color});
  std::vector<shadow_line> lines;
  while (!remaining.empty()) {
    auto highest = std::max_element(remaining.begin(), remaining.end(),
                                    [](auto& a, auto& b) { return a.row < b.row; });
    auto rightmost = std::max_element(remaining.begin(), remaining.end(),
                                      [](auto& a, auto& b) { return a.column < b.column; });
    shadow_line line{*highest, *rightmost};
    lines.push_back(line);
    remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                   [&](auto& pt) { return pt == line.high || pt == line.right; }),
                    remaining.end());
  }
  return lines;
}

inline tableau p_from_shadow(const colored_permutation& p) {
  tableau t(p.k);
  for (const shadow_line& line : shadow_lines(p)) {
    if (line.single())
      t.cols.push_back(column::single(line.high.color, line.high.row));
    else
      t.cols.push_back(column::stacked(line.right.color, line.right.row, line.high.row));
  }
  return t;
}

// All permutations reachable from p by repositioning, for any two-X shadow
// line, its higher element anywhere to the left of the line's rightmost
// element, colours fixed; closed under such moves.
inline std::vector<colored_permutation> positional_class(const colored_permutation& p) {
  validate(p);
  std::set<colored_permutation> seen{p};
  std::vector<colored_permutation> queue{p};
  while (!queue.empty()) {
    colored_permutation cur = std::move(queue.back());
    queue.pop_back();
    for (const shadow_line& line : shadow_lines(cur)) {
      if (line.single()) continue;
      const perm_entry mover{line.high.row, line.high.color};
      std::vector<perm_entry> rest;
      for (const perm_entry& e : cur.entries)
        if (e != mover) rest.push_back(e);
      for (int slot = 0; slot < static_cast<int>(rest.size()) + 1; ++slot) {
        colored_permutation cand(cur.k);
        cand.entries = rest;
        cand.entries.insert(cand.entries.begin() + slot, mover);
        // the mover must stay left of the line's rightmost element
        int mover_pos = slot;
        int later_pos = -1;
        for (int i = 0; i < cand.size(); ++i)
          if (cand.entries[i].value == line.right.row) later_pos = i;
        if (mover_pos >= later_pos) continue;
        if (seen.insert(cand).second) queue.push_back(cand);
      }
    }
  }
  return std::vector<colored_permutation>(seen.begin(), seen.end());
}

// Oracle: the full fibre of P under insertion, by exhausting all k^n * n!
// permutations.  Guarded; the guard compares the sweep size against
// max_states and refuses rather than run away.
inline std::vector<colored_permutation> p_fiber_bruteforce(const colored_permutation& p,
                                                           long long max_states = 2'000'000) {
  validate(p);
  long long states = 1;
  for (int i = 1; i <= p.size(); ++i) {
    states *= i * static_cast<long long>(p.k);
    if (states > max_states)
      throw error("p_fiber_bruteforce: k^n*n! exceeds the guard of " + std::to_string(max_states));
  }
  const tableau target = insert(p).p;
  std::vector<colored_permutation> out;
  permutation_enumerator en(p.size(), p.k);
  while (auto cand = en.next())
    if (insert(*cand).p == target) out.push_back(std::move(*cand));
  return out;
}

}  // namespace fibtab

#pragma once

#include "fibtab/colored_permutation.hpp"
#include "fibtab/error.hpp"
#include "fibtab/insertion.hpp"
#include "fibtab/tableau.hpp"

// Ribbon-height statistics.  vert sums (height - 1) over a tableau's ribbons
// and depends only on the shape word; split sums k - top_height over its
// stacks.  For an insertion pair, spin(P,Q) = vert(P) + split(Q) - split(P),
// and the colour of the inserted permutation equals the spin of its pair.

namespace fibtab {

inline int vert(const tableau& t) {
  int total = 0;
  for (const column& c : t.cols) {
    if (c.is_double())
      total += t.k - 1;  // (t-1) + (k+1-t-1)
    else
      total += c.single_height() - 1;
  }
  return total;
}

inline int split(const tableau& t) {
  int total = 0;
  for (const column& c : t.cols)
    if (c.is_double()) total += t.k - c.top_height();
  return total;
}

inline int spin(const tableau& p, const tableau& q) {
  if (shape_word(p) != shape_word(q)) throw error("spin: tableaux have different shapes");
  return vert(p) + split(q) - split(p);
}

inline bool check_color_to_spin(int n, int k) {
  permutation_enumerator en(n, k);
  while (auto p = en.next()) {
    insertion_pair pq = insert(*p);
    if (color(*p) != spin(pq.p, pq.q)) return false;
  }
  return true;
}

}  // namespace fibtab

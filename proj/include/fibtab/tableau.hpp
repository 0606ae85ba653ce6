#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibtab/error.hpp"
#include "fibtab/fib_word.hpp"

// Column-level model of k-ribbon Fibonacci tableaux.  A column is either a
// single k-ribbon of height h (the shape letter 1_h) or a stack of two
// k-ribbons (the shape letter 2): a top ribbon of height t over a bottom
// ribbon whose height is forced to k+1-t.  Labels live on ribbons; a tableau
// with n ribbons carries the labels 1..n, one per ribbon.
//
// Two label disciplines matter:
//   standard - the leftmost bottom ribbon holds n, bottom labels strictly
//              decrease left to right, and in every stack the top label is
//              smaller than the bottom label (equivalently: removing the
//              labels 1,2,...,n in order always removes a stack top or the
//              rightmost single column);
//   path     - the labels record a saturated chain from the empty word in
//              Z(k): removing n,n-1,...,1 in order always removes a ribbon
//              whose left neighbours are all stacks.

namespace fibtab {

class column {
public:
  column() = default;

  static column single(int height, int label) {
    assert(height >= 1 && label >= 1);
    column c;
    c.h_ = height;
    c.bottom_ = label;
    return c;
  }

  static column stacked(int top_height, int top_label, int bottom_label) {
    assert(top_height >= 1 && top_label >= 1 && bottom_label >= 1);
    column c;
    c.h_ = top_height;
    c.top_ = top_label;
    c.bottom_ = bottom_label;
    return c;
  }

  bool is_double() const { return top_ != 0; }

  int top_height() const {
    assert(is_double());
    return h_;
  }
  int top_label() const {
    assert(is_double());
    return top_;
  }
  int single_height() const {
    assert(!is_double());
    return h_;
  }
  // The single ribbon's label, or the stack's bottom label.
  int bottom_label() const { return bottom_; }
  // Height of the bottom ribbon; for a stack it is forced to k+1-top_height.
  int bottom_height(int k) const { return is_double() ? k + 1 - h_ : h_; }

  int ribbons() const { return is_double() ? 2 : 1; }

  friend bool operator==(const column&, const column&) = default;
  friend auto operator<=>(const column&, const column&) = default;

private:
  int h_ = 0;      // single height, or top ribbon height
  int top_ = 0;    // top label; 0 marks a single column
  int bottom_ = 0; // single/bottom label
};

struct tableau {
  int k = 1;
  std::vector<column> cols;  // cols[0] is the leftmost column

  tableau() = default;
  explicit tableau(int k_, std::vector<column> cs = {}) : k(k_), cols(std::move(cs)) {}

  bool empty() const { return cols.empty(); }
  int column_count() const { return static_cast<int>(cols.size()); }

  int ribbons() const {
    int n = 0;
    for (const column& c : cols) n += c.ribbons();
    return n;
  }

  friend bool operator==(const tableau&, const tableau&) = default;
  friend auto operator<=>(const tableau&, const tableau&) = default;
};

// Heights within 1..k and labels exactly {1..n}, one per ribbon.
inline void validate(const tableau& t) {
  if (t.k < 1) throw error("tableau: k must be >= 1");
  const int n = t.ribbons();
  std::vector<bool> seen(n + 1, false);
  auto check_label = [&](int label, int col) {
    if (label < 1 || label > n)
      throw error("tableau: label " + std::to_string(label) + " out of 1.." + std::to_string(n),
                  col + 1);
    if (seen[label]) throw error("tableau: repeated label " + std::to_string(label), col + 1);
    seen[label] = true;
  };
  for (int i = 0; i < t.column_count(); ++i) {
    const column& c = t.cols[i];
    int h = c.is_double() ? c.top_height() : c.single_height();
    if (h < 1 || h > t.k)
      throw error("tableau: ribbon height " + std::to_string(h) + " out of 1.." +
                      std::to_string(t.k),
                  i + 1);
    check_label(c.bottom_label(), i);
    if (c.is_double()) check_label(c.top_label(), i);
  }
}

inline fib_word shape_word(const tableau& t) {
  fib_word w(t.k);
  for (const column& c : t.cols)
    w.letters.push_back(c.is_double() ? letter::two() : letter::one(c.single_height()));
  return w;
}

// ---------------------------------------------------------------------------
// Standardness.

// Characterisation: bottom labels strictly decrease left to right and every
// stack has top label < bottom label.
inline bool is_standard(const tableau& t) {
  for (int i = 0; i < t.column_count(); ++i) {
    const column& c = t.cols[i];
    if (i + 1 < t.column_count() && !(c.bottom_label() > t.cols[i + 1].bottom_label()))
      return false;
    if (c.is_double() && !(c.top_label() < c.bottom_label())) return false;
  }
  return true;
}

// Removal-order definition, kept as an independent cross-check: erasing the
// labels 1,2,...,n in order must always erase either the top of a stack
// (leaving the bottom as a single of height k+1-top_height) or the single
// ribbon in the rightmost column.
inline bool is_standard_by_removal(const tableau& t) {
  tableau cur = t;
  const int n = t.ribbons();
  for (int label = 1; label <= n; ++label) {
    bool removed = false;
    for (int i = 0; i < cur.column_count(); ++i) {
      column& c = cur.cols[i];
      if (c.is_double() && c.top_label() == label) {
        c = column::single(c.bottom_height(cur.k), c.bottom_label());
        removed = true;
        break;
      }
      if (!c.is_double() && c.bottom_label() == label) {
        if (i + 1 != cur.column_count()) return false;  // not the rightmost column
        cur.cols.pop_back();
        removed = true;
        break;
      }
      if (c.is_double() && c.bottom_label() == label) return false;  // buried under a top
    }
    if (!removed) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Path tableaux <-> saturated chains in Z(k).

namespace detail {

// Removes the ribbon labelled `label` if doing so is a Z(k) downward cover at
// the column level (all columns to its left are stacks).  Returns false when
// no such removal exists.
inline bool remove_path_ribbon(tableau& t, int label) {
  for (int i = 0; i < t.column_count(); ++i) {
    column& c = t.cols[i];
    bool in_leading_stacks = true;
    for (int j = 0; j < i; ++j)
      if (!t.cols[j].is_double()) in_leading_stacks = false;
    if (c.is_double() && c.top_label() == label) {
      if (!in_leading_stacks) return false;
      c = column::single(c.bottom_height(t.k), c.bottom_label());
      return true;
    }
    if (!c.is_double() && c.bottom_label() == label) {
      if (!in_leading_stacks) return false;
      t.cols.erase(t.cols.begin() + i);
      return true;
    }
    if (c.is_double() && c.bottom_label() == label) return false;
  }
  return false;
}

}  // namespace detail

inline bool is_path(const tableau& t) {
  tableau cur = t;
  for (int label = t.ribbons(); label >= 1; --label)
    if (!detail::remove_path_ribbon(cur, label)) return false;
  return true;
}

// The chain (empty word, nu_1, ..., nu_n) recorded by a path tableau.
inline std::vector<fib_word> path_to_chain(const tableau& t) {
  const int n = t.ribbons();
  std::vector<fib_word> chain(n + 1, fib_word(t.k));
  tableau cur = t;
  for (int label = n; label >= 1; --label) {
    chain[label] = shape_word(cur);
    if (!detail::remove_path_ribbon(cur, label))
      throw error("path_to_chain: ribbon " + std::to_string(label) +
                      " is not removable; not a path tableau",
                  label);
  }
  return chain;
}

// Inverse: replay a saturated chain, labelling the ribbon created at step i
// with i.  Inserting 1_h at letter position p creates a single column there;
// turning the leftmost 1_g into a 2 stacks a top of height k+1-g onto the
// single at that position.
inline tableau chain_to_path(const std::vector<fib_word>& chain) {
  if (chain.empty()) throw error("chain_to_path: chain must start at the empty word");
  const int k = chain.front().k;
  if (!chain.front().empty())
    throw error("chain_to_path: chain must start at the empty word", 1);
  tableau t(k);
  for (int i = 1; i < static_cast<int>(chain.size()); ++i) {
    const fib_word& z = chain[i - 1];
    const fib_word& w = chain[i];
    if (w.k != k) throw error("chain_to_path: mixed alphabets in chain", i);
    if (!is_cover(z, w))
      throw error("chain_to_path: step " + std::to_string(i) + " is not a cover in Z(k)", i);
    if (w.size() == z.size() + 1) {
      // The created ribbon is w's leftmost 1: inserting at any earlier spot of
      // the leading 2-run would have put a 1 there.
      int p = leading_two_run(w);
      t.cols.insert(t.cols.begin() + p, column::single(w.letters[p].height(), i));
    } else {
      int p = *leftmost_one(z);
      column& c = t.cols[p];
      assert(!c.is_double() && c.single_height() == z.letters[p].height());
      c = column::stacked(k + 1 - c.single_height(), i, c.bottom_label());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration at desk scale.

// All standard tableaux of shape w: free top heights on the 2-columns, and a
// labelling with strictly decreasing bottoms and top < bottom per stack.
inline std::vector<tableau> enumerate_standard(const fib_word& w) {
  const int k = w.k;
  const int m = w.size();
  const int n = w.rank();
  std::vector<int> doubles;  // column indices of the 2's
  for (int i = 0; i < m; ++i)
    if (w.letters[i].is_two()) doubles.push_back(i);
  const int d = static_cast<int>(doubles.size());

  std::vector<tableau> out;
  // Choose the set of bottom labels (assignment to columns is then forced by
  // the decreasing condition), permute the rest over the stack tops.
  std::vector<int> bottoms(m), tops(d);
  auto emit_tilings = [&]() {
    // tops[] currently holds the top labels per 2-column; spread all k top
    // heights per stack.
    std::vector<int> heights(d, 1);
    while (true) {
      tableau t(k);
      int di = 0;
      for (int i = 0; i < m; ++i) {
        if (w.letters[i].is_two()) {
          t.cols.push_back(column::stacked(heights[di], tops[di], bottoms[i]));
          ++di;
        } else {
          t.cols.push_back(column::single(w.letters[i].height(), bottoms[i]));
        }
      }
      out.push_back(std::move(t));
      int j = d - 1;
      while (j >= 0 && heights[j] == k) heights[j--] = 1;
      if (j < 0) break;
      ++heights[j];
    }
  };
  auto try_labelling = [&](const std::vector<int>& bottom_set) {
    for (int i = 0; i < m; ++i) bottoms[i] = bottom_set[i];
    std::vector<int> rest;
    {
      std::vector<bool> used(n + 1, false);
      for (int b : bottom_set) used[b] = true;
      for (int v = 1; v <= n; ++v)
        if (!used[v]) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end());
    do {
      bool ok = true;
      for (int j = 0; j < d && ok; ++j)
        if (!(rest[j] < bottoms[doubles[j]])) ok = false;
      if (ok) {
        for (int j = 0; j < d; ++j) tops[j] = rest[j];
        emit_tilings();
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  // All decreasing m-sequences from {1..n} = all m-subsets, sorted descending.
  std::vector<int> subset;
  auto choose = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == m) {
      std::vector<int> bs(subset);
      std::sort(bs.begin(), bs.end(), std::greater<>());
      try_labelling(bs);
      return;
    }
    for (int v = from; v <= n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  if (m == 0) {
    out.push_back(tableau(k));
  } else {
    choose(choose, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void collect_chains(const fib_word& w, std::vector<fib_word>& suffix,
                           std::vector<tableau>& out) {
  suffix.push_back(w);
  if (w.empty()) {
    std::vector<fib_word> chain(suffix.rbegin(), suffix.rend());
    out.push_back(chain_to_path(chain));
  } else {
    for (const fib_word& z : covers_down(w)) collect_chains(z, suffix, out);
  }
  suffix.pop_back();
}

}  // namespace detail

// All path tableaux of shape w, one per saturated chain from the empty word.
inline std::vector<tableau> enumerate_path(const fib_word& w) {
  std::vector<tableau> out;
  std::vector<fib_word> suffix;
  detail::collect_chains(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cell-grid realisation.  A single of height h occupies h cells above its
// base plus k-h cells in row 0 to the right; a stack occupies a column of
// k+1 cells plus k-1 cells in row 0, the top ribbon owning the top t vertical
// cells and the rightmost k-t row-0 cells.  Origin is bottom-left.

struct cell_grid {
  struct cell {
    int label = 0;
    int ribbon = 0;  // 0-based id, columns left to right, bottom before top

    friend bool operator==(const cell&, const cell&) = default;
  };

  int width = 0;
  int height = 0;
  std::map<std::pair<int, int>, cell> cells;  // keyed by (x, y)
};

inline cell_grid make_cell_grid(const tableau& t) {
  cell_grid g;
  const int k = t.k;
  int x = 0;
  int ribbon = 0;
  auto put = [&](int cx, int cy, int label, int id) {
    g.cells[{cx, cy}] = {label, id};
    g.width = std::max(g.width, cx + 1);
    g.height = std::max(g.height, cy + 1);
  };
  for (const column& c : t.cols) {
    if (!c.is_double()) {
      const int h = c.single_height();
      const int id = ribbon++;
      for (int y = 0; y < h; ++y) put(x, y, c.bottom_label(), id);
      for (int i = 1; i <= k - h; ++i) put(x + i, 0, c.bottom_label(), id);
      x += 1 + k - h;
    } else {
      const int th = c.top_height();
      const int bid = ribbon++;
      const int tid = ribbon++;
      for (int y = 0; y <= k - th; ++y) put(x, y, c.bottom_label(), bid);
      for (int i = 1; i <= th - 1; ++i) put(x + i, 0, c.bottom_label(), bid);
      for (int y = k + 1 - th; y <= k; ++y) put(x, y, c.top_label(), tid);
      for (int i = th; i <= k - 1; ++i) put(x + i, 0, c.top_label(), tid);
      x += k;
    }
  }
  g.width = x;
  return g;
}

// ---------------------------------------------------------------------------
// ASCII rendering: fixed-width boxes, doubled separators ('=' and '#') on
// ribbon boundaries and the outer border, thin ones ('-' and '|') inside a
// ribbon, '+' at lattice corners.

inline std::string render_ascii(const tableau& t) {
  if (t.empty()) return "";
  const cell_grid g = make_cell_grid(t);
  int label_w = 1;
  for (const auto& [xy, c] : g.cells)
    label_w = std::max(label_w, static_cast<int>(std::to_string(c.label).size()));
  const int cw = label_w + 2;

  const int rows = 2 * g.height + 1;
  const int cols = g.width * (cw + 1) + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));

  auto cell_at = [&](int x, int y) -> const cell_grid::cell* {
    auto it = g.cells.find({x, y});
    return it == g.cells.end() ? nullptr : &it->second;
  };
  auto mark_corner = [&](int r, int c) { canvas[r][c] = '+'; };

  for (const auto& [xy, c] : g.cells) {
    const auto [x, y] = xy;
    const int r = 2 * (g.height - 1 - y) + 1;
    const int cb = x * (cw + 1);
    // label, centred
    std::string lab = std::to_string(c.label);
    int pad = cw - static_cast<int>(lab.size());
    int left = pad / 2;
    for (int i = 0; i < static_cast<int>(lab.size()); ++i) canvas[r][cb + 1 + left + i] = lab[i];
    // four edges; a neighbour in the same ribbon makes the edge thin
    auto edge_thick = [&](int nx, int ny) {
      const cell_grid::cell* nb = cell_at(nx, ny);
      return nb == nullptr || nb->ribbon != c.ribbon;
    };
    canvas[r][cb] = edge_thick(x - 1, y) ? '#' : '|';
    canvas[r][cb + cw + 1] = edge_thick(x + 1, y) ? '#' : '|';
    char top = edge_thick(x, y + 1) ? '=' : '-';
    char bot = edge_thick(x, y - 1) ? '=' : '-';
    for (int i = 1; i <= cw; ++i) {
      canvas[r - 1][cb + i] = top;
      canvas[r + 1][cb + i] = bot;
    }
    mark_corner(r - 1, cb);
    mark_corner(r - 1, cb + cw + 1);
    mark_corner(r + 1, cb);
    mark_corner(r + 1, cb + cw + 1);
  }

  std::string out;
  for (std::string& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace fibtab

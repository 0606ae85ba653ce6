#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibtab/error.hpp"

namespace fibtab {

// One column of the two-line notation: value x_i carrying a colour j_i.
struct perm_entry {
  int value = 0;
  int color = 0;

  friend bool operator==(const perm_entry&, const perm_entry&) = default;
  friend auto operator<=>(const perm_entry&, const perm_entry&) = default;
};

// A k-coloured permutation of {1..n}; entries[i] sits at position i+1.
struct colored_permutation {
  int k = 1;
  std::vector<perm_entry> entries;

  colored_permutation() = default;
  explicit colored_permutation(int k_, std::vector<perm_entry> es = {})
      : k(k_), entries(std::move(es)) {}

  int size() const { return static_cast<int>(entries.size()); }
  bool empty() const { return entries.empty(); }

  friend bool operator==(const colored_permutation&, const colored_permutation&) = default;
  friend auto operator<=>(const colored_permutation&, const colored_permutation&) = default;
};

inline void validate(const colored_permutation& p) {
  const int n = p.size();
  if (p.k < 1) throw error("colored_permutation: k must be >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const auto& e = p.entries[i];
    if (e.value < 1 || e.value > n)
      throw error("colored_permutation: value " + std::to_string(e.value) + " out of 1.." +
                      std::to_string(n),
                  i + 1);
    if (seen[e.value])
      throw error("colored_permutation: repeated value " + std::to_string(e.value), i + 1);
    seen[e.value] = true;
    if (e.color < 1 || e.color > p.k)
      throw error("colored_permutation: colour " + std::to_string(e.color) + " out of 1.." +
                      std::to_string(p.k),
                  i + 1);
  }
}

// Text format: "v^c" tokens separated by single spaces; empty permutation is "".
inline std::string format_permutation(const colored_permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.entries[i].value) + "^" + std::to_string(p.entries[i].color);
  }
  return out;
}

inline colored_permutation parse_permutation(const std::string& text, int k) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  colored_permutation p(k);
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    const std::string& tok = tokens[i];
    auto caret = tok.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
      throw error("parse_permutation: malformed entry '" + tok + "'", i + 1);
    int v = 0, c = 0;
    try {
      size_t used = 0;
      v = std::stoi(tok.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument(tok);
      c = std::stoi(tok.substr(caret + 1), &used);
      if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw error("parse_permutation: malformed entry '" + tok + "'", i + 1);
    }
    p.entries.push_back({v, c});
  }
  validate(p);
  return p;
}

// ---------------------------------------------------------------------------
// Square diagram: an X of colour j_i in column i, row x_i (both 1-based,
// columns left to right, rows bottom to top).

struct square_cell {
  int column = 0;
  int row = 0;
  int color = 0;

  friend bool operator==(const square_cell&, const square_cell&) = default;
  friend auto operator<=>(const square_cell&, const square_cell&) = default;
};

struct square_diagram {
  int n = 0;
  int k = 1;
  std::vector<square_cell> cells;  // one per column, sorted by column
};

inline square_diagram to_square_diagram(const colored_permutation& p) {
  square_diagram d;
  d.n = p.size();
  d.k = p.k;
  for (int i = 0; i < p.size(); ++i)
    d.cells.push_back({i + 1, p.entries[i].value, p.entries[i].color});
  return d;
}

// Transpose of the square diagram: position x_i receives (i, j_i).
inline colored_permutation inverse(const colored_permutation& p) {
  colored_permutation q(p.k);
  q.entries.resize(p.size());
  for (int i = 0; i < p.size(); ++i)
    q.entries[p.entries[i].value - 1] = {i + 1, p.entries[i].color};
  return q;
}

// color(pi) = sum of (j_i - 1) over all entries.
inline int color(const colored_permutation& p) {
  int total = 0;
  for (const auto& e : p.entries) total += e.color - 1;
  return total;
}

// ---------------------------------------------------------------------------
// Enumeration of all k^n * n! coloured permutations, deterministic order:
// value sequences lexicographically, colour vectors as a base-k odometer
// (last position fastest) within each value sequence.

class permutation_enumerator {
public:
  permutation_enumerator(int n, int k) : n_(n), k_(k), values_(n), colors_(n, 1) {
    if (n < 0) throw error("permutation_enumerator: n must be >= 0");
    if (k < 1) throw error("permutation_enumerator: k must be >= 1");
    std::iota(values_.begin(), values_.end(), 1);
  }

  std::optional<colored_permutation> next() {
    if (done_) return std::nullopt;
    colored_permutation p(k_);
    p.entries.resize(n_);
    for (int i = 0; i < n_; ++i) p.entries[i] = {values_[i], colors_[i]};
    advance();
    return p;
  }

private:
  void advance() {
    for (int i = n_ - 1; i >= 0; --i) {
      if (colors_[i] < k_) {
        ++colors_[i];
        return;
      }
      colors_[i] = 1;
    }
    if (!std::next_permutation(values_.begin(), values_.end())) done_ = true;
  }

  int n_, k_;
  std::vector<int> values_;
  std::vector<int> colors_;
  bool done_ = false;
};

inline std::vector<colored_permutation> enumerate_all(int n, int k) {
  std::vector<colored_permutation> out;
  permutation_enumerator en(n, k);
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace fibtab

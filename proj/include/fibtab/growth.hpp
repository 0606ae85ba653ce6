#pragma once

#include <optional>
#include <vector>

#include "fibtab/colored_permutation.hpp"
#include "fibtab/error.hpp"
#include "fibtab/fib_word.hpp"
#include "fibtab/tableau.hpp"

// Fomin growth diagrams over Z(k).  The square diagram of a coloured
// permutation is bordered by empty words along the bottom and left edges;
// each remaining corner is computed from the corner below-left (nu), left
// (mu1), below (mu2) and the cell's X:
//
//   1. one of mu1, mu2 covers nu and the other equals nu -> the covering one;
//   2. both cover nu (equal or not)                      -> prepend a 2 to nu;
//   3. all equal, cell holds an X of colour i            -> prepend 1_i to nu;
//   4. all equal, no X                                   -> nu.
//
// The right edge read bottom-up and the top edge read left-right are then
// saturated chains; their path tableaux are written P-hat and Q-hat.

namespace fibtab {

struct growth_diagram {
  int n = 0;
  int k = 1;
  square_diagram squares;
  std::vector<std::vector<fib_word>> corner;  // corner[col][row], 0..n each way
};

inline fib_word local_rule(const fib_word& nu, const fib_word& mu1, const fib_word& mu2,
                           std::optional<int> x_color) {
  auto status = [&](const fib_word& mu, const char* side) {
    if (mu == nu) return false;
    if (!is_cover(nu, mu))
      throw error(std::string("local_rule: ") + side + " edge is neither equal to nor a cover of nu");
    return true;
  };
  const bool c1 = status(mu1, "left");
  const bool c2 = status(mu2, "bottom");
  if (x_color && (c1 || c2))
    throw error("local_rule: an X is only allowed when all three corners are equal");
  if (c1 && c2) {
    fib_word lambda = nu;
    lambda.letters.insert(lambda.letters.begin(), letter::two());
    // Rule 2 is stated unconditionally; make sure the reading is consistent.
    if (!is_cover(mu1, lambda) || !is_cover(mu2, lambda))
      throw error("local_rule: rule 2 output does not cover both sides");
    return lambda;
  }
  if (c1) return mu1;
  if (c2) return mu2;
  if (x_color) {
    if (*x_color < 1 || *x_color > nu.k) throw error("local_rule: X colour out of range");
    fib_word lambda = nu;
    lambda.letters.insert(lambda.letters.begin(), letter::one(*x_color));
    return lambda;
  }
  return nu;
}

inline growth_diagram build_growth(const colored_permutation& p) {
  validate(p);
  growth_diagram g;
  g.n = p.size();
  g.k = p.k;
  g.squares = to_square_diagram(p);
  g.corner.assign(g.n + 1, std::vector<fib_word>(g.n + 1, fib_word(g.k)));
  // x_in_cell[col][row] holds the colour, 0 when empty (1-based cells)
  std::vector<std::vector<int>> x_in_cell(g.n + 1, std::vector<int>(g.n + 1, 0));
  for (const square_cell& c : g.squares.cells) x_in_cell[c.column][c.row] = c.color;
  for (int row = 1; row <= g.n; ++row) {
    for (int col = 1; col <= g.n; ++col) {
      std::optional<int> x;
      if (x_in_cell[col][row] != 0) x = x_in_cell[col][row];
      g.corner[col][row] =
          local_rule(g.corner[col - 1][row - 1], g.corner[col - 1][row], g.corner[col][row - 1], x);
    }
  }
  return g;
}

// Rightmost column, bottom to top.
inline std::vector<fib_word> right_edge_chain(const growth_diagram& g) {
  return g.corner.empty() ? std::vector<fib_word>{fib_word(g.k)} : g.corner[g.n];
}

// Top row, left to right.
inline std::vector<fib_word> top_edge_chain(const growth_diagram& g) {
  std::vector<fib_word> chain;
  for (int col = 0; col <= g.n; ++col) chain.push_back(g.corner[col][g.n]);
  return chain;
}

inline tableau extract_p_hat(const growth_diagram& g) { return chain_to_path(right_edge_chain(g)); }
inline tableau extract_q_hat(const growth_diagram& g) { return chain_to_path(top_edge_chain(g)); }

}  // namespace fibtab

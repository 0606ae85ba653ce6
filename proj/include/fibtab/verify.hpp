#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fibtab/colored_permutation.hpp"
#include "fibtab/evacuation.hpp"
#include "fibtab/fib_word.hpp"
#include "fibtab/growth.hpp"
#include "fibtab/insertion.hpp"
#include "fibtab/shadow.hpp"
#include "fibtab/stats.hpp"
#include "fibtab/tableau.hpp"

// Exhaustive desk-scale checks of the structural theorems: every check sweeps
// a full enumeration and reports the first counterexample it meets.

namespace fibtab {

struct check_result {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample, or a short summary
};

// The fully worked 5-coloured permutation 2^3 7^1 1^1 5^4 6^3 4^2 3^4 and
// every object it determines, frozen exactly.
inline check_result check_worked_example() {
  check_result res;
  res.name = "worked example (k=5, n=7)";
  auto fail = [&](const std::string& why) {
    res.ok = false;
    res.detail = why;
    return res;
  };
  const colored_permutation pi = parse_permutation("2^3 7^1 1^1 5^4 6^3 4^2 3^4", 5);
  const tableau p{5, {column::stacked(4, 3, 7), column::stacked(2, 4, 6), column::single(4, 5),
                      column::stacked(1, 1, 2)}};
  const tableau q{5, {column::stacked(5, 3, 2), column::stacked(3, 7, 6), column::single(4, 5),
                      column::stacked(3, 4, 1)}};
  const tableau p_hat{5, {column::stacked(2, 4, 3), column::stacked(4, 6, 5), column::single(4, 7),
                          column::stacked(5, 2, 1)}};

  growth_diagram g = build_growth(pi);
  if (format_word(g.corner[7][7]) != "2 2 1_4 2") return fail("top-right corner word");
  insertion_pair pq = insert(pi);
  if (pq.p != p) return fail("P differs from the reference tableau");
  if (pq.q != q) return fail("Q differs from the reference tableau");
  if (extract_p_hat(g) != p_hat) return fail("P-hat differs");
  if (extract_q_hat(g) != q) return fail("Q-hat differs");
  if (evacuate(p) != p_hat) return fail("ev(P) != P-hat");
  if (vert(p) + vert(q) != 30) return fail("vert(P,Q) != 30");
  if (split(p) != 8) return fail("split_P != 8");
  if (split(q) != 4) return fail("split_Q != 4");
  if (spin(p, q) != 11) return fail("spin != 11");
  if (color(pi) != 11) return fail("color != 11");
  return res;
}

// The reference P-equivalence class of 4^3 5^1 2^1 1^4 3^2: exactly eight
// permutations, all inside the exhaustive insertion fibre.  The fibre is
// strictly larger (colours of the lines' higher elements are free); its size
// goes into `detail` rather than being asserted.
inline check_result check_reference_class() {
  check_result res;
  res.name = "reference P-equivalence class (n=5, k=5)";
  const colored_permutation pi = parse_permutation("4^3 5^1 2^1 1^4 3^2", 5);
  const std::set<std::string> expected{
      "5^1 4^3 2^1 1^4 3^2", "5^1 2^1 4^3 1^4 3^2", "4^3 5^1 2^1 1^4 3^2",
      "2^1 5^1 4^3 1^4 3^2", "4^3 2^1 5^1 1^4 3^2", "2^1 4^3 5^1 1^4 3^2",
      "4^3 2^1 1^4 5^1 3^2", "2^1 4^3 1^4 5^1 3^2"};
  auto cls = positional_class(pi);
  std::set<std::string> got;
  for (const auto& q : cls) got.insert(format_permutation(q));
  if (got != expected) {
    res.ok = false;
    res.detail = "positional class differs from the reference list of eight";
    return res;
  }
  auto fibre = p_fiber_bruteforce(pi);
  std::set<colored_permutation> fset(fibre.begin(), fibre.end());
  for (const auto& q : cls) {
    if (!fset.count(q)) {
      res.ok = false;
      res.detail = format_permutation(q) + " escapes the fibre";
      return res;
    }
  }
  res.detail = "class 8 of fibre " + std::to_string(fibre.size());
  return res;
}

// Over every coloured permutation of (n, k): insertion round-trips, P is
// standard (both routes), Q is a path tableau, Q equals the growth diagram's
// Q-hat, ev(P) equals P-hat, the shadow construction reproduces P, and
// colour equals spin.
inline check_result check_bijection_sweep(int n, int k) {
  check_result res;
  res.name = "bijection sweep n=" + std::to_string(n) + " k=" + std::to_string(k);
  long long count = 0;
  permutation_enumerator en(n, k);
  while (auto p = en.next()) {
    ++count;
    insertion_pair pq = insert(*p);
    auto fail = [&](const std::string& why) {
      res.ok = false;
      res.detail = why + " at " + format_permutation(*p);
    };
    if (shape_word(pq.p) != shape_word(pq.q)) return fail("shape(P) != shape(Q)"), res;
    if (!is_standard(pq.p) || !is_standard_by_removal(pq.p)) return fail("P not standard"), res;
    if (!is_path(pq.q)) return fail("Q not a path tableau"), res;
    if (uninsert(pq.p, pq.q) != *p) return fail("uninsert(insert(p)) != p"), res;
    growth_diagram g = build_growth(*p);
    if (extract_q_hat(g) != pq.q) return fail("Q != Q-hat"), res;
    if (extract_p_hat(g) != evacuate(pq.p)) return fail("ev(P) != P-hat"), res;
    if (p_from_shadow(*p) != pq.p) return fail("shadow P != insertion P"), res;
    if (color(*p) != spin(pq.p, pq.q)) return fail("color != spin"), res;
  }
  res.detail = std::to_string(count) + " permutations";
  return res;
}

inline check_result check_differential_identity(int k, int n) {
  check_result res;
  res.name = "differential identity k=" + std::to_string(k) + " n=" + std::to_string(n);
  auto r = verify_differential_identity(k, n);
  res.ok = r.ok;
  res.detail = r.lhs.str() + (r.ok ? " == " : " != ") + r.rhs.str();
  return res;
}

// For every shape of rank <= max_rank: the standard and path enumerations
// have e(w) elements each, and evacuation maps the standard set bijectively
// onto the path set.
inline check_result check_enumeration_equality(int k, int max_rank) {
  check_result res;
  res.name = "enumeration equality k=" + std::to_string(k) + " rank<=" + std::to_string(max_rank);
  chain_counter counter;
  for (int n = 0; n <= max_rank; ++n) {
    for (const fib_word& w : elements_of_rank(k, n)) {
      auto standard = enumerate_standard(w);
      auto path = enumerate_path(w);
      const big_int& e = counter.count(w);
      if (big_int(standard.size()) != e || big_int(path.size()) != e) {
        res.ok = false;
        res.detail = "counts disagree at " + format_word(w);
        return res;
      }
      std::set<tableau> image;
      for (const tableau& t : standard) image.insert(evacuate(t));
      if (image.size() != path.size() ||
          !std::equal(image.begin(), image.end(), path.begin(), path.end())) {
        res.ok = false;
        res.detail = "evacuation not onto the path tableaux at " + format_word(w);
        return res;
      }
    }
  }
  return res;
}

// unevacuate(evacuate(P)) == P, evacuate(unevacuate(T)) == T, and the stacks
// of ev(P) carry the height-swapped tiling of the stacks of P.
inline check_result check_evacuation_roundtrip(int k, int max_rank) {
  check_result res;
  res.name = "evacuation round-trip k=" + std::to_string(k) + " rank<=" + std::to_string(max_rank);
  for (int n = 0; n <= max_rank; ++n) {
    for (const fib_word& w : elements_of_rank(k, n)) {
      for (const tableau& p : enumerate_standard(w)) {
        tableau ev = evacuate(p);
        if (!is_path(ev) || shape_word(ev) != w) {
          res.ok = false;
          res.detail = "evacuate broke shape or pathness at " + format_word(w);
          return res;
        }
        for (int i = 0; i < p.column_count(); ++i) {
          const column &a = p.cols[i], &b = ev.cols[i];
          bool swapped = a.is_double()
                             ? (b.is_double() && b.top_height() == k + 1 - a.top_height())
                             : (!b.is_double() && b.single_height() == a.single_height());
          if (!swapped) {
            res.ok = false;
            res.detail = "tiling swap violated at " + format_word(w);
            return res;
          }
        }
        if (unevacuate(ev) != p) {
          res.ok = false;
          res.detail = "unevacuate(evacuate(P)) != P at " + format_word(w);
          return res;
        }
      }
      for (const tableau& t : enumerate_path(w)) {
        if (evacuate(unevacuate(t)) != t) {
          res.ok = false;
          res.detail = "evacuate(unevacuate(T)) != T at " + format_word(w);
          return res;
        }
      }
    }
  }
  return res;
}

inline check_result check_degree_law(int k, int max_rank) {
  check_result res;
  res.name = "degree law k=" + std::to_string(k) + " rank<=" + std::to_string(max_rank);
  for (int n = 0; n <= max_rank; ++n) {
    for (const fib_word& w : elements_of_rank(k, n)) {
      if (!degree_law(w)) {
        res.ok = false;
        res.detail = "violated at " + format_word(w);
        return res;
      }
    }
  }
  return res;
}

// positional_class(p) is contained in the exhaustive insertion fibre of p,
// for every p of the given size.  A single insertion sweep groups the fibres.
inline check_result check_class_containment(int n, int k) {
  check_result res;
  res.name = "class containment n=" + std::to_string(n) + " k=" + std::to_string(k);
  std::map<tableau, std::set<colored_permutation>> fibres;
  permutation_enumerator en(n, k);
  while (auto p = en.next()) fibres[insert(*p).p].insert(*p);
  permutation_enumerator en2(n, k);
  while (auto p = en2.next()) {
    const auto& fibre = fibres[insert(*p).p];
    for (const colored_permutation& q : positional_class(*p)) {
      if (!fibre.count(q)) {
        res.ok = false;
        res.detail = format_permutation(q) + " escapes the fibre of " + format_permutation(*p);
        return res;
      }
    }
  }
  return res;
}

}  // namespace fibtab

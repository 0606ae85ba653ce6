// Acceptance suite: exhaustive, exact-match checks of every structural
// theorem at desk scale.  Each criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fibtab/verify.hpp"

using namespace fibtab;

namespace {

struct criterion {
  std::string name;
  double time_limit_s;  // 0 = untimed
  std::function<bool(std::string&)> run;
};

// 1. The worked example: every frozen reference value, exactly.
bool worked_example(std::string& why) {
  check_result r = check_worked_example();
  if (!r.ok) why = r.detail;
  return r.ok;
}

// 2. Bijection sweep over all coloured permutations, n <= 4 with k <= 3 and
//    additionally n = 5 with k = 2.
bool bijection_sweep(std::string& why) {
  std::vector<std::pair<int, int>> bounds;
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) bounds.emplace_back(n, k);
  bounds.emplace_back(5, 2);
  for (auto [n, k] : bounds) {
    check_result r = check_bijection_sweep(n, k);
    if (!r.ok) return why = r.name + ": " + r.detail, false;
  }
  return true;
}

// 3. sum of e(w)^2 over rank-n words equals k^n * n!, k <= 3, n <= 8.
bool differential_identity(std::string& why) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 8; ++n) {
      check_result r = check_differential_identity(k, n);
      if (!r.ok) return why = r.name + ": " + r.detail, false;
    }
  }
  return true;
}

// 4. Standard and path enumerations both count e(w) per shape of rank <= 6,
//    and evacuation is a bijection between them.
bool enumeration_equality(std::string& why) {
  for (int k = 1; k <= 3; ++k) {
    check_result r = check_enumeration_equality(k, 6);
    if (!r.ok) return why = r.name + ": " + r.detail, false;
  }
  return true;
}

// 5. Evacuation round-trips and the tiling swap, rank <= 5, k <= 3.
bool evacuation_roundtrip(std::string& why) {
  for (int k = 1; k <= 3; ++k) {
    check_result r = check_evacuation_roundtrip(k, 5);
    if (!r.ok) return why = r.name + ": " + r.detail, false;
  }
  return true;
}

// 6. Degree law, rank <= 7, k <= 3.
bool degree_law_sweep(std::string& why) {
  for (int k = 1; k <= 3; ++k) {
    check_result r = check_degree_law(k, 7);
    if (!r.ok) return why = r.name + ": " + r.detail, false;
  }
  return true;
}

// 7. The reference P-equivalence class of 4^3 5^1 2^1 1^4 3^2: exactly those
//    eight, each inside the brute-force fibre; containment of class in fibre
//    for every p with n <= 4, k <= 3.  The stronger claim that the class IS
//    the fibre fails under colour changes of line-leading X's; the sizes are
//    reported, not asserted equal.
bool class_check(std::string& why) {
  check_result pub = check_reference_class();
  if (!pub.ok) return why = pub.detail, false;
  std::printf("  note: positional %s members (the equality claim is reported, not asserted)\n",
              pub.detail.c_str());

  for (int n = 0; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      check_result r = check_class_containment(n, k);
      if (!r.ok) return why = r.name + ": " + r.detail, false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<criterion> criteria{
      {"1 worked-example goldens", 1.0, worked_example},
      {"2 bijection sweep (n<=4 k<=3, n=5 k=2)", 60.0, bijection_sweep},
      {"3 differential identity (k<=3 n<=8)", 30.0, differential_identity},
      {"4 enumeration equality (rank<=6 k<=3)", 0.0, enumeration_equality},
      {"5 evacuation round-trips (rank<=5 k<=3)", 0.0, evacuation_roundtrip},
      {"6 degree law (rank<=7 k<=3)", 0.0, degree_law_sweep},
      {"7 P-equivalence classes", 0.0, class_check},
  };
  bool all_ok = true;
  for (criterion& c : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
      ok = false;
      why = "over the time budget of " + std::to_string(c.time_limit_s) + "s";
    }
    std::printf("criterion %s: %s [%.2fs]%s%s\n", c.name.c_str(), ok ? "PASS" : "FAIL", secs,
                why.empty() ? "" : " -- ", why.c_str());
    all_ok = all_ok && ok;
  }
  std::printf(all_ok ? "ALL CRITERIA PASSED\n" : "SOME CRITERIA FAILED\n");
  return all_ok ? 0 : 1;
}

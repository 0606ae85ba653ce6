#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "fibtab/insertion.hpp"

using namespace fibtab;

namespace {

column S(int h, int label) { return column::single(h, label); }
column D(int top_h, int top, int bottom) { return column::stacked(top_h, top, bottom); }

const char* worked = "2^3 7^1 1^1 5^4 6^3 4^2 3^4";

// Every stage of the worked insertion.
const tableau P[8] = {
    tableau(5),
    tableau{5, {S(3, 2)}},
    tableau{5, {S(1, 7), S(3, 2)}},
    tableau{5, {D(1, 1, 7), S(3, 2)}},
    tableau{5, {D(4, 5, 7), D(1, 1, 2)}},
    tableau{5, {D(3, 6, 7), S(4, 5), D(1, 1, 2)}},
    tableau{5, {D(2, 4, 7), S(3, 6), S(4, 5), D(1, 1, 2)}},
    tableau{5, {D(4, 3, 7), D(2, 4, 6), S(4, 5), D(1, 1, 2)}},
};
const tableau Q[8] = {
    tableau(5),
    tableau{5, {S(3, 1)}},
    tableau{5, {S(1, 2), S(3, 1)}},
    tableau{5, {D(5, 3, 2), S(3, 1)}},
    tableau{5, {D(5, 3, 2), D(3, 4, 1)}},
    tableau{5, {D(5, 3, 2), S(4, 5), D(3, 4, 1)}},
    tableau{5, {D(5, 3, 2), S(3, 6), S(4, 5), D(3, 4, 1)}},
    tableau{5, {D(5, 3, 2), D(3, 7, 6), S(4, 5), D(3, 4, 1)}},
};

}  // namespace

TEST_CASE("the worked insertion reproduces every reference stage") {
  colored_permutation perm = parse_permutation(worked, 5);
  tableau p(5), q(5);
  for (int i = 1; i <= 7; ++i) {
    insert_step(p, q, perm.entries[i - 1].value, perm.entries[i - 1].color, i);
    CHECK(p == P[i]);
    CHECK(q == Q[i]);
    CHECK(shape_word(p) == shape_word(q));
    CHECK(is_standard(p));
    CHECK(is_path(q));
  }
  insertion_pair pq = insert(perm);
  CHECK(pq.p == P[7]);
  CHECK(pq.q == Q[7]);
}

TEST_CASE("single steps from the worked example") {
  // inserting 5^4 into P3 stacks on the 7's and bumps the 1's into the 2's
  tableau p = P[3], q = Q[3];
  insert_step(p, q, 5, 4, 4);
  CHECK(p == P[4]);
  CHECK(q == Q[4]);

  // inserting 6^3 into P4 bumps (5,h4) out, creating a single between stacks
  p = P[4];
  q = Q[4];
  insert_step(p, q, 6, 3, 5);
  CHECK(p == P[5]);
  CHECK(q == Q[5]);

  tableau e(4), eq(4);
  insert_step(e, eq, 1, 2, 1);
  CHECK(e == tableau{4, {S(2, 1)}});
  CHECK(eq == tableau{4, {S(2, 1)}});
}

TEST_CASE("insert_step rejects bad input") {
  tableau p = P[3], q = Q[3];
  CHECK_THROWS_AS(insert_step(p, q, 2, 1, 4), error);  // value already present
  CHECK_THROWS_AS(insert_step(p, q, 9, 6, 4), error);  // colour out of range
  CHECK_THROWS_AS(insert_step(p, q, 9, 0, 4), error);
}

TEST_CASE("insert on tiny permutations") {
  insertion_pair one = insert(parse_permutation("1^3", 4));
  CHECK(one.p == tableau{4, {S(3, 1)}});
  CHECK(one.q == tableau{4, {S(3, 1)}});

  insertion_pair two = insert(parse_permutation("2^1 1^2", 2));
  CHECK(two.p == tableau{2, {D(2, 1, 2)}});
  CHECK(two.q == tableau{2, {D(2, 2, 1)}});
}

TEST_CASE("uninsert_step reverses the worked stages") {
  for (int i = 7; i >= 1; --i) {
    tableau p = P[i], q = Q[i];
    uninsert_result r = uninsert_step(p, q);
    colored_permutation perm = parse_permutation(worked, 5);
    CHECK(r.value == perm.entries[i - 1].value);
    CHECK(r.color == perm.entries[i - 1].color);
    CHECK(p == P[i - 1]);
    CHECK(q == Q[i - 1]);
  }
}

TEST_CASE("uninsert recovers the permutation") {
  CHECK(format_permutation(uninsert(P[7], Q[7])) == worked);
  CHECK(uninsert(tableau(3), tableau(3)) == colored_permutation(3));
  CHECK(format_permutation(uninsert(tableau{4, {S(3, 1)}}, tableau{4, {S(3, 1)}})) == "1^3");
}

TEST_CASE("uninsert_step rejects malformed pairs") {
  tableau p(3), q(3);
  CHECK_THROWS_AS(uninsert_step(p, q), error);
  tableau p2{2, {S(1, 1)}}, q2{2, {S(2, 1)}};
  CHECK_THROWS_AS(uninsert_step(p2, q2), error);  // shapes differ
  // a reverse cascade that would run through a single column has no preimage
  tableau p3{2, {S(1, 3), D(1, 1, 2)}}, q3{2, {S(1, 1), D(1, 3, 2)}};
  CHECK_THROWS_AS(uninsert_step(p3, q3), error);
}

TEST_CASE("uninsert after insert is the identity") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      permutation_enumerator en(n, k);
      while (auto perm = en.next()) {
        insertion_pair pq = insert(*perm);
        CHECK(shape_word(pq.p) == shape_word(pq.q));
        CHECK(is_standard(pq.p));
        CHECK(is_standard_by_removal(pq.p));
        CHECK(is_path(pq.q));
        CHECK(uninsert(pq.p, pq.q) == *perm);
      }
    }
  }
}

TEST_CASE("every same-shape (standard, path) pair is an insertion image") {
  // rank n with k colours: k^n n! pairs map onto the k^n n! permutations
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) {
      std::set<colored_permutation> recovered;
      long long pairs = 0;
      for (const fib_word& w : elements_of_rank(k, n)) {
        for (const tableau& p : enumerate_standard(w)) {
          for (const tableau& q : enumerate_path(w)) {
            ++pairs;
            colored_permutation perm = uninsert(p, q);
            insertion_pair back = insert(perm);
            CHECK(back.p == p);
            CHECK(back.q == q);
            recovered.insert(perm);
          }
        }
      }
      long long expect = 1;
      for (int i = 1; i <= n; ++i) expect *= i * static_cast<long long>(k);
      CHECK(pairs == expect);
      CHECK(static_cast<long long>(recovered.size()) == expect);
      if (n == 3 && k == 2) CHECK(pairs == 48);
    }
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "fibtab/serialize.hpp"

using namespace fibtab;

namespace {

column S(int h, int label) { return column::single(h, label); }
column D(int top_h, int top, int bottom) { return column::stacked(top_h, top, bottom); }

const tableau worked_p{5, {D(4, 3, 7), D(2, 4, 6), S(4, 5), D(1, 1, 2)}};

}  // namespace

TEST_CASE("tableau JSON round-trips") {
  CHECK(parse_tableau(dump_tableau(worked_p)) == worked_p);
  CHECK(parse_tableau(dump_tableau(tableau(3))) == tableau(3));
  tableau one{2, {S(2, 1)}};
  CHECK(parse_tableau(dump_tableau(one)) == one);
}

TEST_CASE("serialised text form is stable") {
  CHECK(dump_tableau(tableau{2, {S(2, 1)}}) ==
        R"({"columns":[{"single":{"h":2,"label":1}}],"k":2})");
  CHECK(dump_tableau(tableau{2, {D(1, 1, 2)}}) ==
        R"({"columns":[{"double":{"bottom":2,"top":1,"top_h":1}}],"k":2})");
}

TEST_CASE("parser validates the tableau invariants") {
  CHECK_THROWS_AS(parse_tableau("not json"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":2})"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"columns":[]})"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":2,"columns":[{"single":{"h":3,"label":1}}]})"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":2,"columns":[{"single":{"h":1,"label":2}}]})"), error);
  CHECK_THROWS_AS(
      parse_tableau(R"({"k":2,"columns":[{"single":{"h":1,"label":1}},{"single":{"h":1,"label":1}}]})"),
      error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":2,"columns":[{"double":{"top_h":1,"top":1}}]})"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":2,"columns":[{"triple":{}}]})"), error);
  CHECK_THROWS_AS(parse_tableau(R"({"k":0,"columns":[]})"), error);
}

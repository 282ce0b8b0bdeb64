#include "doctest.h"

#include "fixtures.hpp"
#include "hooklab/errors.hpp"
#include "hooklab/json_io.hpp"

using namespace hooklab;

TEST_CASE("tree JSON") {
  const auto six = decode(fixtures::kSixVertexCode, 2);
  CHECK(to_json(six).dump() == R"j({"k":2,"code":"(((--)-)((--)(--)))"})j");
  CHECK(tree_from_json(to_json(six)) == six);
  CHECK_THROWS_AS(tree_from_json(parse_json(R"j({"k":2})j")), DomainError);
  CHECK_THROWS_AS(tree_from_json(parse_json(R"j({"k":2,"code":"(-"})j")), ParseError);
}

TEST_CASE("staircase array JSON") {
  const auto a = fixtures::insertion_array();
  CHECK(to_json(a).dump() == R"j({"k":2,"C":[[],[2],[2,1],[1,2,2],[1,2,2,1],[2,2,1,1,2]]})j");
  CHECK(array_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(array_from_json(parse_json(R"j({"k":2,"C":[[],[1,1]]})j")), DomainError);
  CHECK_THROWS_AS(array_from_json(parse_json(R"j({"k":2,"C":[[],[0]]})j")), DomainError);
  CHECK_THROWS_AS(array_from_json(parse_json(R"j({"k":2,"C":[[],["1"]]})j")), DomainError);
  CHECK_THROWS_AS(array_from_json(parse_json(R"j([1,2])j")), DomainError);
}

TEST_CASE("labeled tree JSON") {
  const auto ternary = fixtures::ternary_labeling();
  const auto json = to_json(ternary);
  CHECK(json["labels"]["7"] == Json::array({3, 2, 1, 2, 3, 2}));
  CHECK(labeled_tree_from_json(json) == ternary);

  auto missing = json;
  missing["labels"].erase("3");
  CHECK_THROWS_AS(labeled_tree_from_json(missing), DomainError);
}

TEST_CASE("malformed JSON carries a position") {
  try {
    parse_json(R"j({"k": 2,, })j");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("report JSON and CSV") {
  const auto report = verify_han2(3);
  const auto json = to_json(report);
  CHECK(json["formula"] == "han2");
  CHECK(json["computed"]["numerator"] == "1");
  CHECK(json["computed"]["denominator"] == "5040");
  CHECK(json["terms"] == "5");
  CHECK(json["verdict"] == true);
  CHECK(csv_header(report) == "formula,n,k,terms,verdict");
  CHECK(csv_row(report) == "han2,3,2,5,true");

  const auto filtration = to_json(compute_filtration(1));
  CHECK(filtration["level_sizes"] == Json::array({"8", "4"}));
  CHECK(filtration["halving_ok"] == true);

  const auto census = to_json(census_I(2, 2));
  CHECK(census["shapes"].size() == 2);
  CHECK(census["total"] == "2");
}

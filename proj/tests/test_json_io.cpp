#include <doctest.h>

#include "fratio/json_io.hpp"

using namespace fratio;

TEST_CASE("lists and rationals") {
  const IntList a = IntList::make({30, 1, -15, -10, -6});
  CHECK(to_json(a).dump() == "[1,30,-6,-10,-15]");
  CHECK(list_from_json(to_json(a)) == a);
  CHECK(to_json(Rat(17, 108)) == "17/108");
  CHECK(rat_from_json(Json("-3/6")) == Rat(-1, 2));
  CHECK(rat_from_json(Json(4)) == Rat(4));
  CHECK_THROWS_AS(list_from_json(Json::parse("[1, \"2\"]")), std::invalid_argument);
  CHECK_THROWS_AS(list_from_json(Json::parse("[2, -2]")), ListError);
}

TEST_CASE("verdicts round-trip") {
  for (const IntList &a : {IntList::make({30, 1, -15, -10, -6}), IntList::make({6, 36, -2, -11, -11, -18}),
                           IntList::make({3, -1})}) {
    const RatioVerdict v = is_integral_ratio(a);
    const RatioVerdict w = verdict_from_json(Json::parse(to_json(v).dump()));
    CHECK(w.status == v.status);
    CHECK(w.witness_x == v.witness_x);
    CHECK(w.value_range == v.value_range);
    CHECK(w.reason == v.reason);
    if (v.status != RatioVerdict::Status::Invalid) {
      CHECK(w.height == v.height);
    }
  }
  const Json j = to_json(is_integral_ratio(IntList::make({30, 1, -15, -10, -6})));
  CHECK(j.dump() == R"({"status":"integral","height":1,"value_range":[0,1]})");
}

TEST_CASE("families round-trip") {
  const Json doc = Json::parse(
      R"({"d": 2, "entries": [[6,0],[0,1],[-2,0],[-3,0],[0,-6],[-1,5]], "constraints": [[1,-5],">0"], "coprime": true, "height": 2})");
  const AffineList f = family_from_json(doc);
  CHECK(f.d == 2);
  REQUIRE(f.constraints.size() == 1);
  CHECK(f.constraints[0].coeffs == Coeffs{1, -5});
  CHECK(f.constraints[0].rel == Relation::Positive);
  CHECK(f.height == 2);
  CHECK(family_from_json(Json::parse(to_json(f).dump())) == f);

  const Json many = Json::parse(R"([[[1,0],">0"],[[0,1],">=0"]])");
  const auto cs = constraints_from_json(many, 2);
  REQUIRE(cs.size() == 2);
  CHECK(cs[1].rel == Relation::NonNegative);
  CHECK_THROWS_AS(constraints_from_json(Json::parse(R"([[1,0,0],">0"])"), 2), std::invalid_argument);
  CHECK_THROWS_AS(constraints_from_json(Json::parse(R"([[1,0],"<0"])"), 2), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"entries": [[1]]})")), std::invalid_argument);
}

TEST_CASE("family verdict fields") {
  const AffineList f = AffineList::make(2, parse_family("3a,18a,-a,-9a,-b,-11a+b").entries, {}, true, 2);
  const Json j = to_json(verify_family_exact(f));
  CHECK(j["status"] == "fails");
  CHECK(j["point"]["x"] == "3/11");
  CHECK(j["point"]["y"] == "0");
  CHECK(j["value"] == -1);
}

TEST_CASE("certificates") {
  const Json j = to_json(certify_irreducible(IntList::make({3, 33, -1, -11, -12, -12}), 11));
  CHECK(j["p"] == 11);
  CHECK(j["conclusion"] == "irreducible");
  CHECK(j["pair_exclusion"] == "search");
  CHECK_FALSE(j.contains("decomposition"));
  const auto d = search_decomposition(IntList::make({6, -1, -2, -3}));
  REQUIRE(d);
  CHECK(to_json(*d).dump() == R"({"b":[6,-1,-5],"c":[5,-2,-3],"canceled":[5]})");
}

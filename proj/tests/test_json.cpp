#include "doctest.h"

#include "mzv/json_io.hpp"
#include "mzv/powersum.hpp"

using namespace mzv;

TEST_CASE("exact values serialize as p/q strings") {
  json j = special_value_json(SpecialValue(make_rational(1, 4)));
  CHECK(j.dump() == R"({"kind":"exact","value":"1/4"})");
  CHECK(rational_from_json(rational_json(make_rational(-7, 3))) == make_rational(-7, 3));
}

TEST_CASE("numeric and mixed values carry err") {
  json n = special_value_json(SpecialValue(Numeric::of(BigFloat(1) / 3, BigFloat("1e-20"))));
  CHECK(n["kind"] == "numeric");
  CHECK(n.contains("err"));
  auto r = directional_limit(PowerSumParams::make({3, 2, 2}), {{0, 0, 0}, {0, 0, 1}});
  json m = special_value_json(r.value);
  CHECK(m["kind"] == "mixed");
  CHECK(m["base"] == "-1/8");
  CHECK(m["terms"][0]["coeff"] == "-1/480");
  CHECK(m["numeric"].contains("err"));
}

TEST_CASE("output is deterministic") {
  auto a = special_value_json(directional_limit(PowerSumParams::make({3, 2, 2}), {{0, 0, 0}, {0, 0, 1}}).value);
  auto b = special_value_json(directional_limit(PowerSumParams::make({3, 2, 2}), {{0, 0, 0}, {0, 0, 1}}).value);
  CHECK(a.dump() == b.dump());
  IdentityGrid g1 = verify_identity_grid(2, 2), g2 = verify_identity_grid(2, 2);
  for (size_t i = 0; i < g1.pairs.size(); ++i)
    CHECK(identity_report_json(g1.pairs[i]).dump() == identity_report_json(g2.pairs[i]).dump());
}

TEST_CASE("polynomial and family round trips") {
  MPoly p = parse_poly("3/2 x1^2 x2 - x2 + 1/6", 2);
  CHECK(poly_from_json(poly_json(p)) == p);
  PolyFamily f = family_from_json(json::parse(R"({"polys":["x1", "x1 + x2"]})"));
  REQUIRE(f.n() == 2);
  CHECK(f.P[1] == parse_poly("x1 + x2", 2));
  PolyFamily g = family_from_json(json::array({poly_json(parse_poly("x1", 1)), "x1^2 + x2^2"}));
  CHECK(g.n() == 2);
}

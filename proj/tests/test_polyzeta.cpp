#include "doctest.h"

#include "mzv/error.hpp"
#include "mzv/identities.hpp"
#include "mzv/polyzeta.hpp"

using namespace mzv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

PolyFamily family(const std::vector<std::string> &texts) {
  PolyFamily f;
  unsigned j = 0;
  for (auto &t : texts) f.P.push_back(parse_poly(t, ++j));
  return f;
}

BigFloat num(const SpecialValue &v) { return v.to_numeric().value; }
BigFloat err(const SpecialValue &v) { return v.to_numeric().err; }
double dev(const SpecialValue &v, const BigFloat &t) { return abs(num(v) - t).convert_to<double>(); }

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const MzvError &e) {
    return e.code();
  }
  FAIL("no MzvError thrown");
  return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("build_QN examples") {
  PolyFamily f = family({"x1", "x1 + x2"});
  QN a = build_QN(f, {1, 1});
  CHECK(a.Q == parse_poly("x1^2 + x1 x2", 2));
  CHECK(a.q == 2);
  QN b = build_QN(f, {0, 0});
  CHECK(b.Q == MPoly::constant(2, q(1)));
  CHECK(b.q == 0);
  QN c = build_QN(f, {2, 0});
  CHECK(c.Q == parse_poly("x1^2", 2));
  CHECK(c.q == 2);
  CHECK(code_of([&] { build_QN(f, {1}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("zeta_P_at on the Euler double family") {
  PolyZetaResult r = zeta_P_at(family({"x1", "x1 + x2"}), {0, 0});
  CHECK(dev(r.value, to_bigfloat(q(5, 12))) < 1e-9);
  CHECK(!r.flags.unverified);
  REQUIRE(r.flags.positivity.size() == 2);
}

TEST_CASE("property: zeta_P_at is Z of the last polynomial with Q_N") {
  for (auto texts : {std::vector<std::string>{"x1", "x1 + x2"}, {"x1", "x1^2 + x2^2"}, {"x1 + 1", "x1 + x2"}}) {
    PolyFamily f = family(texts);
    for (unsigned a = 0; a <= 1; ++a)
      for (unsigned b = 0; b <= 1; ++b) {
        PolyZetaResult r = zeta_P_at(f, {a, b});
        SpecialValue z = Z_value(f.P.back(), build_QN(f, {a, b}).Q, 0);
        CHECK(num(r.value) == num(z));
        CHECK(err(r.value) == err(z));
      }
  }
}

TEST_CASE("property: Euler double family matches the exact Bernoulli evaluation") {
  PolyFamily f = family({"x1", "x1 + x2"});
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b) {
      PolyZetaResult r = zeta_P_at(f, {a, b});
      CHECK(dev(r.value, to_bigfloat(double_B6(a, b))) < 1e-9);
    }
}

TEST_CASE("four cubes family") {
  PolyFamily f = family({"x1", "x1 + x2", "x1 + x2 + x3", "x1^3 + x2^3 + x3^3 + x4^3"});
  PolyZetaResult r = zeta_P_at(f, {0, 0, 0, 0});
  BigFloat g = gamma_real(BigFloat(1) / 3).value;
  BigFloat expect = BigFloat(1) / 16 + to_bigfloat(bernoulli(4)) / 27 * g * g * g;
  CHECK(dev(r.value, expect) < 1e-9);
  SpecialValue d = diagonal_value(f, {0, 0, 0, 0});
  CHECK(abs(num(d) - num(r.value)) <= err(d) + err(r.value) + BigFloat("1e-30"));
}

TEST_CASE("G_factor examples") {
  CHECK(abs(G_factor({0, {q(1)}}).value - 1) < BigFloat("1e-12"));
  CHECK(abs(G_factor({1, {q(1)}}).value - log(BigFloat(2))) < BigFloat("1e-12"));
  CHECK(abs(G_factor({0, {q(1, 2)}}).value - 2) < BigFloat("1e-12"));
}

TEST_CASE("diagonal_value examples and cross-path agreement") {
  SpecialValue a = diagonal_value(family({"x1"}), {0});
  REQUIRE(a.is_exact());
  CHECK(a.exact() == q(-1, 2));
  for (unsigned N = 0; N <= 4; ++N) {
    SpecialValue v = diagonal_value(family({"x1"}), {N});
    REQUIRE(v.is_exact());
    CHECK(v.exact() == riemann_zeta_exact_nonpositive(N));
  }
  for (auto texts : {std::vector<std::string>{"x1", "x1^2 + x2^2"}, {"x1 + 1", "x1^2 + x2^2"}}) {
    PolyFamily f = family(texts);
    for (unsigned b = 0; b <= 1; ++b) {
      SpecialValue d = diagonal_value(f, {1, b});
      SpecialValue z = zeta_P_at(f, {1, b}).value;
      CHECK(abs(num(d) - num(z)) <= err(d) + err(z) + BigFloat("1e-30"));
    }
  }
  CHECK(code_of([] { diagonal_value(family({"x1", "x1^2 + x1 x2 + x2^2"}), {0, 0}); }) == ErrorCode::NotDiagonal);
}

TEST_CASE("property: tightening rel_tol converges within reported error") {
  PolyFamily f = family({"x1", "x1^2 + x1 x2 + x2^2"});
  QuadratureSettings qs;
  qs.rel_tol = 1e-6;
  SpecialValue prev = zeta_P_at(f, {1, 0}, qs).value;
  for (int t = 0; t < 3; ++t) {
    qs.rel_tol /= 2;
    SpecialValue next = zeta_P_at(f, {1, 0}, qs).value;
    CHECK(abs(num(next) - num(prev)) <= err(prev) + err(next));
    prev = next;
  }
}

TEST_CASE("validation") {
  CHECK(code_of([] { zeta_P_at(family({"x1", "x1^2 + x2"}), {0, 0}); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([] { zeta_P_at(family({"x1 - 5", "x1 + x2"}), {0, 0}); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([] { zeta_P_at(family({"x1", "x1^2 - 3 x1 x2 + x2^2"}), {0, 0}); }) ==
        ErrorCode::HypothesisViolated);
  PolyFamily f = family({"x1", "x1 + x2"});
  validate(f);
  CHECK(f.validated);
  CHECK(f.flags.h0s_pass.size() == 1);
  CHECK(f.flags.h0s_pass[0]);
}

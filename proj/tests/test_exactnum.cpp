#include "doctest.h"

#include "mzv/error.hpp"
#include "mzv/exactnum.hpp"
#include "mzv/numeric.hpp"
#include "mzv/oracle.hpp"

#include <cmath>

using namespace mzv;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
double dbl(const BigFloat &x) { return x.convert_to<double>(); }
} // namespace

TEST_CASE("bernoulli values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(2) == q(1, 6));
}

TEST_CASE("bernoulli_tilde values") {
  CHECK(bernoulli_tilde(1) == q(1, 2));
  CHECK(bernoulli_tilde(2) == q(1, 6));
  CHECK(bernoulli_tilde(3) == 0);
}

TEST_CASE("bernoulli polynomials") {
  auto c0 = bernoulli_poly(0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == 1);
  CHECK(eval_bernoulli_poly(1, q(0)) == q(-1, 2));
  CHECK(eval_bernoulli_poly(2, q(1, 2)) == q(-1, 12));
}

TEST_CASE("bernoulli sum identity and odd vanishing") {
  for (unsigned k = 0; k <= 60; ++k) {
    Rational s = 0;
    for (unsigned j = 0; j <= k; ++j) s += Rational(binom_signed(k, j)) * bernoulli(j);
    CHECK(s == bernoulli_tilde(k));
  }
  for (unsigned m = 1; m <= 30; ++m) CHECK(bernoulli(2 * m + 1) == 0);
}

TEST_CASE("binom_signed") {
  CHECK(binom_signed(1, 1) == 1);
  CHECK(binom_signed(2, 3) == 0);
  CHECK(binom_signed(-3, 2) == 6);
}

TEST_CASE("pochhammer_shift") {
  CHECK(pochhammer_shift(q(1, 2), 0, 1) == q(-1, 2));
  CHECK(pochhammer_shift(q(1, 3), 1, 1) == q(4, 9));
  CHECK(pochhammer_shift(q(1, 2), 0, 2) == q(-1, 4));
  CHECK_THROWS_AS(pochhammer_shift(q(0), 0, 1), MzvError);
}

TEST_CASE("pochhammer_shift equals the direct product") {
  for (long num : {-7, -5, -4, -2, -1, 1, 2, 4, 5, 7})
    for (unsigned M = 0; M <= 4; ++M)
      for (unsigned b = 1; b <= 3; ++b) {
        Rational x = q(num, 3);
        Rational p = 1;
        unsigned factors = 0;
        for (long k = -static_cast<long>(M); k < static_cast<long>(b); ++k, ++factors) p *= Rational(k) - x;
        CHECK(factors == M + b);
        CHECK(pochhammer_shift(x, M, b) == p);
      }
}

TEST_CASE("falling factorial convention") {
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(3, -1) == q(1, 4));
}

TEST_CASE("gamma at rationals") {
  Numeric h = gamma_rational_numeric(q(1, 2));
  CHECK(std::fabs(dbl(h.value) - 1.7724538509055160) < 1e-14);
  CHECK(std::fabs(dbl(gamma_rational_numeric(q(1, 3)).value) - 2.6789385347077476) < 1e-14);
  CHECK(std::fabs(dbl(gamma_rational_numeric(q(1, 4)).value) - 3.6256099082219083) < 1e-14);
}

TEST_CASE("gamma reflection") {
  for (long den : {2, 3, 4, 6}) {
    Rational r = q(1, den);
    Numeric a = gamma_rational_numeric(r), b = gamma_rational_numeric(1 - r);
    Numeric prod = a * b;
    BigFloat rhs = bf_pi() / sin(bf_pi() / den);
    CHECK(abs(prod.value - rhs) <= prod.err + BigFloat("1e-70"));
  }
}

TEST_CASE("riemann zeta") {
  CHECK(riemann_zeta_exact_nonpositive(0) == q(-1, 2));
  CHECK(riemann_zeta_exact_nonpositive(2) == 0);
  CHECK(riemann_zeta_exact_nonpositive(1) == q(-1, 12));
  Numeric z2 = riemann_zeta_numeric(BigFloat(2));
  CHECK(abs(z2.value - bf_pi() * bf_pi() / 6) <= z2.err + BigFloat("1e-70"));
}

TEST_CASE("exact zeta at non-positive integers matches the continuation oracle") {
  for (unsigned M = 0; M <= 6; ++M) {
    Numeric v = zeta1_numeric(1, q(1), -BigFloat(M));
    CHECK(std::fabs(dbl(v.value - to_bigfloat(riemann_zeta_exact_nonpositive(M)))) < 1e-8);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational(" -6/4 ") == q(-3, 2));
  CHECK(rational_to_string(q(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), MzvError);
  CHECK_THROWS_AS(parse_rational("abc"), MzvError);
  auto r = exact_root(q(8, 27), 3);
  REQUIRE(r);
  CHECK(*r == q(2, 3));
  CHECK(!exact_root(q(2), 2));
}

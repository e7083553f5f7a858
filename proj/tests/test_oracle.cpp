#include "doctest.h"

#include "mzv/error.hpp"
#include "mzv/oracle.hpp"
#include "mzv/powersum.hpp"

using namespace mzv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
double dev(const Numeric &v, const BigFloat &t) { return abs(v.value - t).convert_to<double>(); }

} // namespace

TEST_CASE("beta integral") {
  CHECK(dev(beta_integral(1, 1, 1, 2), 1) < 1e-30);
  CHECK(dev(beta_integral(1, 1, 2, 1), bf_pi() / 2) < 1e-30);
  CHECK_THROWS_AS(beta_integral(1, 1, 2, BigFloat(1) / 2), MzvError);
}

TEST_CASE("f derivatives at 0") {
  CHECK(f_derivative_at0(1, 1, 3, 2, 2).value == 0);
  CHECK(dev(f_derivative_at0(1, 1, 1, -1, 1), 1) < 1e-30);
  for (int s = -3; s <= 3; ++s) CHECK(dev(f_derivative_at0(1, 1, 2, s, 2), BigFloat(-2 * s)) < 1e-30);
}

TEST_CASE("Euler-Maclaurin in the convergent region") {
  Numeric v = em_inner_sum(1, 1, 1, 3);
  BigFloat z3 = riemann_zeta_numeric(BigFloat(3)).value;
  CHECK(dev(v, z3 - 1) < 1e-10);
  BigFloat direct = 0;
  for (long m = 200000; m >= 1; --m) direct += 1 / pow(BigFloat(1) + BigFloat(m) * m, 2);
  CHECK(dev(em_inner_sum(1, 1, 2, 2), direct) < 1e-12);
}

TEST_CASE("property: raising K leaves the continuation unchanged") {
  for (BigFloat s : {BigFloat(-1) / 3, BigFloat(-7) / 4, BigFloat(5) / 3}) {
    EMSettings a, b;
    a.K = 10;
    b.K = 12;
    Numeric x = em_inner_sum(1, 2, 2, s, a), y = em_inner_sum(1, 2, 2, s, b);
    CHECK(abs(x.value - y.value) <= x.err + y.err);
  }
}

TEST_CASE("zeta1 examples") {
  CHECK(dev(zeta1_numeric(2, q(1), -1), 0) < 1e-10);
  CHECK(dev(zeta1_numeric(2, q(1), 0), BigFloat(-1) / 2) < 1e-10);
  CHECK(dev(zeta1_numeric(3, q(2), -1), BigFloat(1) / 60) < 1e-9);
  CHECK_THROWS_AS(zeta1_numeric(1, q(1), 1), MzvError);
}

TEST_CASE("property: zeta1 oracle against exact values") {
  for (unsigned d : {2u, 3u})
    for (const Rational &g : {q(1), q(1, 2)})
      for (unsigned N = 0; N <= 4; ++N) {
        Rational exact = pow_rational(g, N) * riemann_zeta_exact_nonpositive(d * N);
        CHECK(dev(zeta1_numeric(d, g, -BigFloat(N)), to_bigfloat(exact)) <= 1e-8);
      }
}

TEST_CASE("powersum2 examples") {
  PowerSum2Result a = powersum2_numeric(2, 3, q(1), q(1), 0, -1);
  CHECK(dev(a.value, to_bigfloat(q(-1, 240))) < 1e-6);
  CHECK(a.residual < 1e-6);
  PowerSum2Result b = powersum2_numeric(2, 3, q(1), q(1), 0, 0);
  CHECK(dev(b.value, to_bigfloat(q(1, 4))) < 1e-6);
  BigFloat z2 = bf_pi() * bf_pi() / 6;
  for (int N = 0; N <= 2; ++N) {
    PowerSum2Result c = powersum2_numeric(2, 4, q(1), q(1), 1 + N, -N);
    CHECK(dev(c.value, -z2 / 2) < 1e-6);
  }
}

TEST_CASE("property: powersum2 oracle against the exact recursion") {
  struct Cfg {
    long d1, d2;
    Rational g1, g2;
    long N1, N2;
  };
  for (auto c : {Cfg{2, 3, q(1), q(1), 0, 1}, Cfg{2, 3, q(1), q(1), 1, 1}, Cfg{2, 5, q(1, 2), q(1), 1, 0},
                 Cfg{3, 4, q(2), q(3), 0, 2}, Cfg{2, 3, q(3), q(1, 2), 2, 1}, Cfg{3, 5, q(1), q(2), 1, 2}}) {
    auto params = PowerSumParams::make({c.d1, c.d2}, {c.g1, c.g2});
    Rational exact = value_nonpositive(params, {-c.N1, -c.N2});
    PowerSum2Result r = powersum2_numeric(c.d1, c.d2, c.g1, c.g2, -BigFloat(c.N1), -BigFloat(c.N2));
    CHECK(dev(r.value, to_bigfloat(exact)) <= 1e-6);
    CHECK(r.residual <= 1e-6);
  }
}

TEST_CASE("continuation depth limit") {
  CHECK_THROWS_AS(zeta1_numeric(1, q(1), -200), MzvError);
}

#include "doctest.h"

#include "mzv/identities.hpp"

using namespace mzv;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
} // namespace

TEST_CASE("zeta via B1 and closed form") {
  CHECK(zeta_neg_via_B1(0) == q(-1, 2));
  CHECK(zeta_neg_via_B1(1) == q(-1, 12));
  CHECK(zeta_neg_via_B1(2) == 0);
  CHECK(zeta_neg_closed(0) == q(-1, 2));
  CHECK(zeta_neg_closed(1) == q(-1, 12));
  CHECK(zeta_neg_closed(11) == q(691, 32760));
  for (unsigned N = 0; N <= 40; ++N) CHECK(zeta_neg_via_B1(N) == zeta_neg_closed(N));
}

TEST_CASE("double values") {
  CHECK(double_B3(0, 0) == q(5, 12));
  CHECK(double_B6(0, 0) == q(5, 12));
  CHECK(double_B3(1, 0) == double_B6(1, 0));
  CHECK(double_B6(0, 1) == double_B3(0, 1));
  CHECK(double_B6(2, 2) == double_B3(2, 2));
}

TEST_CASE("identity grid") {
  IdentityGrid g0 = verify_identity_grid(0, 0);
  REQUIRE(g0.pairs.size() == 1);
  CHECK(g0.pairs[0].equal);
  IdentityGrid g = verify_identity_grid(8, 8);
  CHECK(g.pairs.size() == 81);
  CHECK(g.all_equal());
  for (auto &r : g.pairs) CHECK(r.lhs == r.rhs);
  CHECK(g.singles.size() == 17);
}

TEST_CASE("bernoulli sum identity") {
  for (unsigned a = 0; a <= 60; ++a) CHECK(bernoulli_sum_identity(a));
}

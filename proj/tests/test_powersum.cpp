#include "doctest.h"

#include "mzv/error.hpp"
#include "mzv/powersum.hpp"

#include <random>

using namespace mzv;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

double dev(const SpecialValue &v, const BigFloat &target) {
  return abs(v.to_numeric().value - target).convert_to<double>();
}

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const MzvError &e) {
    return e.code();
  }
  FAIL("no MzvError thrown");
  return ErrorCode::InvalidArgument;
}

PowerSumParams random_regular(std::mt19937 &rng, unsigned n) {
  std::uniform_int_distribution<long> dd(2, 6);
  const Rational gs[] = {q(1), q(1, 2), q(2), q(3)};
  std::uniform_int_distribution<int> gi(0, 3);
  while (true) {
    std::vector<long> d(n);
    for (auto &x : d) x = dd(rng);
    if (!regularity_ok(d)) continue;
    std::vector<Rational> g(n);
    for (auto &x : g) x = gs[gi(rng)];
    return PowerSumParams::make(d, g);
  }
}

std::vector<long> last_minus(unsigned n, long l) {
  std::vector<long> N(n, 0);
  N.back() = -l;
  return N;
}

} // namespace

TEST_CASE("regularity examples") {
  CHECK(regularity_ok({2, 3}));
  CHECK(!regularity_ok({2, 2}));
  CHECK(!regularity_ok({1, 3}));
}

TEST_CASE("ira examples") {
  auto a = ira_ok({3, 2, 2});
  CHECK(a.ok);
  CHECK(a.b == 1);
  CHECK(!ira_ok({2, 3, 4}).ok);
  auto c = ira_ok({5, 4, 4, 4, 4});
  CHECK(c.ok);
  CHECK(c.b == 1);
}

TEST_CASE("value_nonpositive examples") {
  auto p23 = PowerSumParams::make({2, 3}, {q(1), q(1)});
  CHECK(value_nonpositive(p23, {0, 0}) == q(1, 4));
  CHECK(value_nonpositive(p23, {0, -1}) == q(-1, 240));
  CHECK(value_nonpositive(PowerSumParams::make({2, 4}), {-1, 0}) == 0);
  CHECK(code_of([&] { value_nonpositive(PowerSumParams::make({2, 2}), {0, 0}); }) == ErrorCode::RegularityViolated);
  CHECK(code_of([&] { value_nonpositive(p23, {1, 0}); }) == ErrorCode::PositiveEntry);
}

TEST_CASE("value_mixed_last_nonpositive examples") {
  auto p24 = PowerSumParams::make({2, 4}, {q(1), q(1)});
  BigFloat z2 = bf_pi() * bf_pi() / 6;
  for (long N = 0; N <= 3; ++N) {
    SpecialValue v = value_mixed_last_nonpositive(p24, {1 + N, -N});
    CHECK(dev(-(q(2) * v), z2) < 1e-8);
  }
  auto p23 = PowerSumParams::make({2, 3});
  SpecialValue same = value_mixed_last_nonpositive(p23, {0, -1});
  REQUIRE(same.is_exact());
  CHECK(same.exact() == value_nonpositive(p23, {0, -1}));
  SpecialValue f = value_mixed_last_nonpositive(p23, {1, -1});
  CHECK(f.kind() != SpecialValue::Kind::Exact);
  CHECK(abs(f.to_numeric().value) < 10);
  CHECK(code_of([&] { value_mixed_last_nonpositive(p23, {0, 1}); }) == ErrorCode::PositiveEntry);
}

TEST_CASE("closed form examples") {
  CHECK(closed_zero(PowerSumParams::make({2, 4, 8})) == q(-1, 8));
  CHECK(closed_last_minus1(PowerSumParams::make({2, 3})) == q(-1, 240));
  CHECK(closed_even_tail(PowerSumParams::make({2, 4}), {1, 0}) == 0);
}

TEST_CASE("A, B, C, H examples") {
  CHECK(A_value({3, 2, 2}, {0, 0, 0}) == 1);
  // product over j = 2, 3 of the shifted factors: (-1 - 1/2) for j = 3 and 1 elsewhere
  CHECK(A_value({3, 2, 2}, {0, 1, 0}) == q(-3, 2));
  CHECK(A_value({5, 4, 4, 4, 4}, {0, 0, 0, 0, 0}) == 1);
  CHECK(B_theta({0, 0, 0}, {q(0), q(0), q(1)}, 1) == -1);
  CHECK(B_theta({0, 0, 0}, {q(0), q(1), q(1)}, 1) == q(-1, 2));
  CHECK(B_theta({0, 1, 0}, {q(0), q(0), q(1)}, 1) == q(1, 2));
  CHECK(H_value(PowerSumParams::make({3, 2, 2}), {0, 0, 0}) == q(-1, 8));
  auto p5 = PowerSumParams::make({5, 4, 4, 4, 4});
  CHECK(H_value(p5, {0, 0, 0, 0, 0}) == q(-1, 2) * value_nonpositive(p5.prefix(4), {0, 0, 0, 0}));
  CHECK(C_value({3, 2, 2}, {0, 0, 0}) == q(1, 16));
}

TEST_CASE("directional limit examples") {
  auto p = PowerSumParams::make({3, 2, 2});
  DirectionalResult r = directional_limit(p, {{0, 0, 0}, {q(0), q(0), q(1)}});
  CHECK(r.C == q(1, 16));
  CHECK(r.H == q(-1, 8));
  CHECK(r.cross_check);
  REQUIRE(r.value.kind() == SpecialValue::Kind::Mixed);
  const Mixed &m = r.value.mixed();
  CHECK(m.base == q(-1, 8));
  REQUIRE(m.terms.size() == 1);
  CHECK(m.terms[0].coeff == q(-1, 480));
  CHECK(m.terms[0].constant.labels() == std::vector<std::string>{"Gamma(1/2)", "Gamma(1/2)"});
  CHECK(dev(r.value, -bf_pi() / 480 - BigFloat(1) / 8) < 1e-12);

  DirectionalResult h = directional_limit(p, {{0, 0, 0}, {q(0), q(1), q(1)}});
  CHECK(dev(h.value, -bf_pi() / 960 - BigFloat(1) / 8) < 1e-12);

  DirectionalResult odd = directional_limit(PowerSumParams::make({4, 2, 2}), {{0, 0, 0}, {q(0), q(0), q(1)}});
  REQUIRE(odd.value.is_exact());
  CHECK(odd.value.exact() == odd.H);

  CHECK(code_of([&] { directional_limit(PowerSumParams::make({2, 3, 4}), {{0, 0, 0}, {q(0), q(0), q(1)}}); }) ==
        ErrorCode::IraViolated);
  CHECK(code_of([&] { directional_limit(p, {{0, 0, 0}, {q(1), q(0), q(0)}}); }) == ErrorCode::ThetaDegenerate);
}

TEST_CASE("property: closed_zero matches the recursion") {
  std::mt19937 rng(21);
  for (int t = 0; t < 10; ++t) {
    auto p = random_regular(rng, 2 + t % 3);
    CHECK(closed_zero(p) == value_nonpositive(p, std::vector<long>(p.n, 0)));
  }
}

TEST_CASE("property: closed forms at the last entry match the recursion") {
  std::mt19937 rng(22);
  for (int t = 0; t < 10; ++t) {
    auto p = random_regular(rng, 2 + t % 3);
    CHECK(closed_last_minus1(p) == value_nonpositive(p, last_minus(p.n, 1)));
    CHECK(closed_last_minus2(p) == value_nonpositive(p, last_minus(p.n, 2)));
  }
}

TEST_CASE("property: even tail closed form") {
  for (std::vector<long> d : {std::vector<long>{2, 4}, {3, 4}, {2, 4, 8}}) {
    for (const Rational &g : {q(1), q(1, 2), q(3)}) {
      auto p = PowerSumParams::make(d, std::vector<Rational>(d.size(), g));
      for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
          std::vector<long> N(d.size(), 0), minusN(d.size(), 0);
          N[0] = a;
          N.back() = b;
          for (size_t j = 0; j < N.size(); ++j) minusN[j] = -N[j];
          CHECK(closed_even_tail(p, N) == value_nonpositive(p, minusN));
        }
    }
  }
}

TEST_CASE("property: zero last entry halves the shorter value") {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    auto p = random_regular(rng, 2 + t % 3);
    for (long l : {1L, 2L}) {
      std::vector<long> N(p.n, 0), M(p.n - 1, 0);
      N[p.n - 2] = -l;
      M.back() = -l;
      CHECK(value_nonpositive(p, N) == q(-1, 2) * value_nonpositive(p.prefix(p.n - 1), M));
    }
  }
}

TEST_CASE("property: directional parts are invariant under scaling theta") {
  auto p = PowerSumParams::make({3, 2, 2});
  std::vector<Rational> theta{q(0), q(1), q(2)};
  DirectionalResult base = directional_limit(p, {{0, 1, 0}, theta});
  for (const Rational &lambda : {q(3), q(-1, 2), q(7, 5)}) {
    std::vector<Rational> t2;
    for (auto &x : theta) t2.push_back(lambda * x);
    DirectionalResult r = directional_limit(p, {{0, 1, 0}, t2});
    CHECK(r.C == base.C);
    CHECK(r.H == base.H);
    CHECK(r.theta_ratio == base.theta_ratio);
  }
}

TEST_CASE("property: C is a nonzero rational and matches its A/B assembly") {
  const std::vector<std::vector<long>> ds{{3, 2, 2}, {5, 4, 4, 4, 4}, {4, 2, 2}, {3, 6, 3}};
  for (auto &d : ds) {
    if (!ira_ok(d).ok) continue;
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= 2; ++b) {
        std::vector<long> N(d.size(), 0);
        N[0] = a;
        N[1] = b;
        CHECK(C_value(d, N) != 0);
        CHECK(C_value(d, N) == C_from_parts(d, N));
      }
  }
}

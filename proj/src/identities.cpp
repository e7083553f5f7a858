#include "mzv/identities.hpp"

#include "mzv/quadrature.hpp"

#include <chrono>

namespace mzv {

namespace {

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

Rational binom(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  return Rational(binom_signed(n, static_cast<unsigned long>(k)));
}

Rational sgn(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational B(long k) { return bernoulli(static_cast<unsigned>(k)); }

Rational Bt(long k) { return bernoulli_tilde(static_cast<unsigned>(k)); }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

Rational zeta_neg_via_B1(unsigned N) {
  Rational out = -B(N + 1) / (N + 1);
  for (unsigned a = 0; a <= N; ++a) out -= binom(N, a) * B(a) / (N + 1 - a);
  return out;
}

Rational zeta_neg_closed(unsigned N) { return sgn(N) * B(N + 1) / (N + 1); }

Rational double_B3(unsigned N1u, unsigned N2u) {
  long N1 = N1u, N2 = N2u, S = N1 + N2;
  Rational t1(0), t2(0), t3(0);
  for (long l = 0; l <= N1; ++l) {
    Rational w = binom(N1, l) / binom(S + 1 - l, N2) * sgn(N1 + 3 - l) / ((S + 2 - l) * (l - N1 - 1));
    for (long k1 = l; k1 <= S + 2; ++k1)
      for (long k2 = 0; k1 + k2 <= S + 2; ++k2) {
        Rational b = B(k1) * B(k2);
        if (b == 0) continue;
        t1 += w * fact(S + 2 - l) / (fact(k1 - l) * fact(k2) * fact(S + 2 - k1 - k2)) * b;
      }
  }
  for (long l = 0; l <= N1; ++l) {
    Rational w = binom(N1, l) / ((N2 + 1) * (N1 + 1 - l));
    for (long k1 = l; k1 <= N2 + 1 + l; ++k1)
      for (long k2 = 0; k1 + k2 <= N2 + 1 + l; ++k2) {
        Rational b = B(k1) * B(k2);
        if (b == 0) continue;
        t2 += w * fact(N2 + 1) / (fact(k1 - l) * fact(k2) * fact(N2 + 1 + l - k1 - k2)) * b;
      }
  }
  for (long l1 = 0; l1 <= N1; ++l1)
    for (long l2 = 0; l2 <= N2; ++l2) {
      Rational w = binom(N1, l1) * binom(N2, l2) / ((S + 2 - l1 - l2) * (N2 + 1 - l2));
      for (long k1 = l1; k1 <= l1 + l2; ++k1)
        for (long k2 = 0; k1 + k2 <= l1 + l2; ++k2) {
          Rational b = B(k1) * B(k2);
          if (b == 0) continue;
          t3 += w * fact(l2) / (fact(k1 - l1) * fact(k2) * fact(l1 + l2 - k1 - k2)) * b;
        }
    }
  return t1 + t2 + t3;
}

Rational double_B6(unsigned N1u, unsigned N2u) {
  long N1 = N1u, N2 = N2u, S = N1 + N2;
  Rational out(0);
  for (long b1 = 0; b1 <= S; ++b1)
    for (long b2 = 0; b1 + b2 <= S; ++b2) {
      if (b2 > N2) continue;
      long A = S + 2 - b1 - b2;
      Rational inner(0);
      for (long j = std::max(0L, b1 - N1); j <= std::min(b1, N2 - b2); ++j)
        inner += binom(b1, j) * falling_factorial(N1, b1 - j - 1) * falling_factorial(N2 - b2, j);
      if (inner == 0) continue;
      Rational w = sgn(A) * fact(A - 1) / (fact(A) * fact(b1) * fact(b2)) * falling_factorial(N2, b2) * inner;
      for (long l = 0; l <= A; ++l) {
        Rational b = Bt(S + 2 - b2 - l) * Bt(b2 + l);
        if (b == 0) continue;
        out += w * binom(A, l) * b;
      }
    }
  return out;
}

bool IdentityGrid::all_equal() const {
  for (auto &r : pairs)
    if (!r.equal) return false;
  for (auto &r : singles)
    if (!r.equal) return false;
  return true;
}

IdentityGrid verify_identity_grid(unsigned maxN1, unsigned maxN2) {
  IdentityGrid g;
  g.pairs.resize(static_cast<size_t>(maxN1 + 1) * (maxN2 + 1));
  parallel_for(g.pairs.size(), [&](size_t idx) {
    unsigned a = static_cast<unsigned>(idx / (maxN2 + 1)), b = static_cast<unsigned>(idx % (maxN2 + 1));
    auto t0 = std::chrono::steady_clock::now();
    IdentityReport &r = g.pairs[idx];
    r.kind = "B3=B6";
    r.params = {a, b};
    r.lhs = double_B3(a, b);
    r.rhs = double_B6(a, b);
    r.equal = r.lhs == r.rhs;
    r.elapsed_ms = ms_since(t0);
  });
  for (unsigned N = 0; N <= maxN1 + maxN2; ++N) {
    auto t0 = std::chrono::steady_clock::now();
    IdentityReport r;
    r.kind = "B1=B2";
    r.params = {N};
    r.lhs = zeta_neg_via_B1(N);
    r.rhs = zeta_neg_closed(N);
    r.equal = r.lhs == r.rhs;
    r.elapsed_ms = ms_since(t0);
    g.singles.push_back(std::move(r));
  }
  return g;
}

bool bernoulli_sum_identity(unsigned a) {
  Rational s(0);
  for (unsigned k = 0; k <= a; ++k) s += Rational(binom_signed(a, k)) * B(k);
  return s == sgn(a) * B(a) && s == Bt(a);
}

} // namespace mzv

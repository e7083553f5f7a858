#include "mzv/oracle.hpp"

#include "mzv/error.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/quadrature.hpp"

#include <cmath>

namespace mzv {

namespace {

using boost::multiprecision::pow;

/// x(x-1)...(x-m+1)/m!
BigFloat gbinom(const BigFloat &x, unsigned m) {
  BigFloat r = 1;
  for (unsigned t = 0; t < m; ++t) r *= (x - t) / BigFloat(t + 1);
  return r;
}

bool is_nonpos_integer(const BigFloat &x) { return x <= 0 && floor(x) == x; }

Numeric bf(const BigFloat &v) { return Numeric::of(v, 4 * ulp_of(v)); }

unsigned choose_K(unsigned K, unsigned d, const BigFloat &s) {
  // smallest K with 2K + d s > 1, then a margin of 2
  BigFloat need = (BigFloat(1) - BigFloat(d) * s) / 2;
  long kmin = static_cast<long>(floor(need).convert_to<double>()) + 1;
  if (kmin < 1) kmin = 1;
  long k = std::max<long>(K, kmin + 2);
  if (k > 60)
    fail(ErrorCode::ContinuationDepthInsufficient,
         "Euler-Maclaurin order needed for this point exceeds 60 (2K > 1 - d*s)");
  return static_cast<unsigned>(k);
}

struct Remainder {
  long double value = 0;
  long double err = 0;
  unsigned intervals = 0;
  bool vanished = false;
};

/// int_0^inf B_{2K}({x}) f^{(2K)}(x)/(2K)! dx for f = (b + a x^d)^{-s}.
Remainder remainder_integral(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s, unsigned K,
                             unsigned order) {
  struct Piece {
    long double coef;
    unsigned xexp;
    long double hexp;
    long double bound_coef;
  };
  std::vector<Piece> pieces;
  for (auto &alpha : weighted_partitions(2 * K, d)) {
    unsigned m = abs_index(alpha);
    BigFloat c = gbinom(-s, m);
    if (c == 0) continue;
    c *= BigFloat(factorial(m).get_str()) / BigFloat(factorial_index(alpha).get_str());
    unsigned xexp = 0;
    for (unsigned j = 1; j <= d; ++j) {
      if (!alpha[j - 1]) continue;
      c *= pow(BigFloat(binom_signed(d, j).get_str()), alpha[j - 1]);
      xexp += (d - j) * alpha[j - 1];
    }
    c *= pow(a, m);
    BigFloat p = -s - m;
    BigFloat base = p < 0 ? a : a + b;
    BigFloat bc = abs(c) * pow(base, p);
    pieces.push_back({c.convert_to<long double>(), xexp, p.convert_to<long double>(), bc.convert_to<long double>()});
  }
  Remainder r;
  if (pieces.empty()) {
    r.vanished = true;
    return r;
  }
  std::vector<long double> bcoef;
  for (auto &c : bernoulli_poly(2 * K)) bcoef.push_back(to_bigfloat(c).convert_to<long double>());
  long double bmax = std::fabs(to_bigfloat(bernoulli(2 * K)).convert_to<long double>());
  long double expo = 2.0L * K + (BigFloat(d) * s).convert_to<long double>() - 1;
  long double bsum = 0;
  for (auto &p : pieces) bsum += p.bound_coef;
  auto tail = [&](long double M) { return bmax * bsum * std::pow(M, -expo) / expo; };
  unsigned M = 4;
  while (M < (1u << 14) && tail(M) > 1e-24L) M *= 2;

  long double la = a.convert_to<long double>(), lb = b.convert_to<long double>();
  std::vector<long double> xs, ws, xs2, ws2;
  gauss_legendre01(order, xs, ws);
  gauss_legendre01(order - order / 4, xs2, ws2);
  // value and the magnitude of the summed pieces, for a rounding bound
  auto integrand = [&](long double x, long double t, long double &absval) {
    long double bt = 0;
    for (size_t k = bcoef.size(); k-- > 0;) bt = bt * t + bcoef[k];
    long double h = lb + la * std::pow(x, static_cast<long double>(d));
    long double acc = 0, mag = 0;
    for (auto &p : pieces) {
      long double term = p.coef * std::pow(x, static_cast<long double>(p.xexp)) * std::pow(h, p.hexp);
      acc += term;
      mag += std::fabs(term);
    }
    absval = std::fabs(bt) * mag;
    return bt * acc;
  };
  struct Cell {
    long double lo, w;
    unsigned depth;
  };
  long double total = 0, qerr = 0, mag = 0;
  for (unsigned j = 0; j < M; ++j) {
    std::vector<Cell> stack{{static_cast<long double>(j), 1.0L, 0}};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      long double s1 = 0, s2 = 0, m1 = 0, dummy = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        long double x = c.lo + c.w * xs[i], a = 0;
        s1 += ws[i] * integrand(x, x - j, a);
        m1 += ws[i] * a;
      }
      for (size_t i = 0; i < xs2.size(); ++i) {
        long double x = c.lo + c.w * xs2[i];
        s2 += ws2[i] * integrand(x, x - j, dummy);
      }
      s1 *= c.w;
      s2 *= c.w;
      m1 *= c.w;
      long double diff = std::fabs(s1 - s2);
      long double floor_err = 64 * std::numeric_limits<long double>::epsilon() * m1;
      if (diff > 1e-24L + 1e-16L * std::fabs(s1) + floor_err && c.depth < 12) {
        stack.push_back({c.lo, c.w / 2, c.depth + 1});
        stack.push_back({c.lo + c.w / 2, c.w / 2, c.depth + 1});
        continue;
      }
      total += s1;
      qerr += diff;
      mag += m1;
    }
  }
  r.value = total;
  r.err = qerr + tail(M) + 64 * std::numeric_limits<long double>::epsilon() * mag;
  r.intervals = M;
  return r;
}

Numeric from_ld(long double v, long double e) { return Numeric::of(BigFloat(v), BigFloat(e)); }

} // namespace

Numeric beta_integral(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s) {
  if (!(a > 0) || !(b > 0) || d == 0) fail(ErrorCode::DomainViolation, "beta integral needs a, b > 0 and d >= 1");
  BigFloat inv_d = BigFloat(1) / d;
  if (!(s > inv_d)) fail(ErrorCode::DomainViolation, "beta integral needs s > 1/d");
  Numeric g = gamma_real(s - inv_d) * gamma_real(inv_d) * rgamma_real(s);
  return g / bf(BigFloat(d) * pow(a, inv_d) * pow(b, s - inv_d));
}

Numeric f_derivative_at0(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s, unsigned k) {
  if (!(b > 0) || d == 0) fail(ErrorCode::DomainViolation, "f derivative needs b > 0 and d >= 1");
  if (k % d != 0) return Numeric::exact(Rational(0));
  unsigned m = k / d;
  BigFloat v = BigFloat(factorial(k).get_str()) * gbinom(-s, m) * pow(a, m) * pow(b, -s - m);
  return bf(v);
}

EMResult em_inner(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s, const EMSettings &st) {
  check_digits(st.precision);
  if (!(a > 0) || !(b > 0) || d == 0) fail(ErrorCode::DomainViolation, "Euler-Maclaurin sum needs a, b > 0");
  EMResult res;
  res.K = choose_K(st.K, d, s);
  Numeric main = Numeric::exact(Rational(0));
  if (d == 1) {
    if (s == 1) fail(ErrorCode::Pole, "pole at s = 1");
    main = bf(pow(b, 1 - s) / (a * (s - 1)));
  } else {
    Numeric rg = rgamma_real(s);
    if (rg.value != 0 || rg.err != 0) {
      BigFloat x = s - BigFloat(1) / d;
      if (is_nonpos_integer(x)) fail(ErrorCode::Pole, "continued beta integral has a pole here");
      main = gamma_real(x) * gamma_real(BigFloat(1) / d) * rg /
             bf(BigFloat(d) * pow(a, BigFloat(1) / d) * pow(b, x));
    }
  }
  Numeric acc = main - bf(pow(b, -s) / 2);
  for (unsigned k = 1; k <= res.K; ++k) {
    Numeric fd = f_derivative_at0(a, b, d, s, 2 * k - 1);
    if (fd.value == 0 && fd.err == 0) continue;
    Rational w = bernoulli(2 * k) / Rational(factorial(2 * k));
    acc = acc - w * fd;
  }
  Remainder r = remainder_integral(a, b, d, s, res.K, st.gl_order);
  res.remainder = from_ld(r.value, r.err);
  res.intervals = r.intervals;
  res.value = acc - res.remainder;
  return res;
}

Numeric em_inner_sum(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s, const EMSettings &st) {
  return em_inner(a, b, d, s, st).value;
}

Numeric zeta1_numeric(unsigned d1, const Rational &gamma1, const BigFloat &s, const EMSettings &st) {
  if (d1 == 0 || gamma1 <= 0) fail(ErrorCode::DomainViolation, "zeta1 needs d1 >= 1 and gamma1 > 0");
  BigFloat sigma = BigFloat(d1) * s;
  if (sigma == 1) fail(ErrorCode::Pole, "d1*s = 1 is the pole of zeta");
  Numeric z = Numeric::exact(Rational(1)) + em_inner_sum(BigFloat(1), BigFloat(1), 1, sigma, st);
  return bf(pow(to_bigfloat(gamma1), -s)) * z;
}

PowerSum2Result powersum2_numeric(unsigned d1, unsigned d2, const Rational &gamma1, const Rational &gamma2,
                                  const BigFloat &s1, const BigFloat &s2, const EMSettings &st) {
  check_digits(st.precision);
  if (d1 == 0 || d2 == 0) fail(ErrorCode::DomainViolation, "d entries must be positive");
  if (gamma1 <= 0 || gamma2 <= 0) fail(ErrorCode::DomainViolation, "gamma entries must be positive");
  PowerSum2Result res;
  res.K = choose_K(st.K, d2, s2);
  EMSettings inner = st;
  inner.K = res.K;
  BigFloat S = s1 + s2;
  BigFloat g2 = to_bigfloat(gamma2);

  res.gamma_block = Numeric::exact(Rational(0));
  if (d2 == 1) {
    if (s2 == 1) fail(ErrorCode::Pole, "pole at s2 = 1");
    res.gamma_block = bf(1 / (g2 * (s2 - 1))) * zeta1_numeric(d1, gamma1, S - 1, inner);
  } else {
    Numeric rg = rgamma_real(s2);
    if (rg.value != 0 || rg.err != 0) {
      BigFloat inv = BigFloat(1) / d2;
      res.gamma_block = gamma_real(s2 - inv) * gamma_real(inv) * rg / bf(BigFloat(d2) * pow(g2, inv)) *
                        zeta1_numeric(d1, gamma1, S - inv, inner);
    }
  }

  res.half_block = make_rational(-1, 2) * zeta1_numeric(d1, gamma1, S, inner);

  res.k_block = Numeric::exact(Rational(0));
  for (unsigned k = 1; k <= res.K; ++k) {
    unsigned odd = 2 * k - 1;
    if (odd % d2 != 0) continue;
    unsigned m = odd / d2;
    BigFloat c = gbinom(-s2, m);
    if (c == 0) continue;
    Rational w = bernoulli(2 * k) / (2 * k);
    res.k_block = res.k_block - w * (bf(c * pow(g2, m)) * zeta1_numeric(d1, gamma1, S + m, inner));
  }

  // remainder block, truncated in m1
  BigFloat g1 = to_bigfloat(gamma1);
  Numeric R = Numeric::exact(Rational(0));
  long double last = 0;
  for (unsigned m1 = 1; m1 <= st.truncation; ++m1) {
    BigFloat b = g1 * pow(BigFloat(m1), d1);
    Remainder r = remainder_integral(g2, b, d2, s2, res.K, st.gl_order);
    if (r.vanished) continue;
    Numeric w = bf(pow(b, -s1));
    R = R + w * from_ld(r.value, r.err);
    last = std::fabs((w.value * BigFloat(r.value)).convert_to<long double>());
  }
  // crude tail allowance from the last computed term
  R.err += BigFloat(last * st.truncation);
  res.remainder_block = -R;
  res.residual = abs(R.value);
  res.value = res.gamma_block + res.half_block + res.k_block + res.remainder_block;
  return res;
}

} // namespace mzv

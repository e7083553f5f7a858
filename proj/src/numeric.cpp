#include "mzv/numeric.hpp"

#include "mzv/error.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace mzv {

void check_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    fail(ErrorCode::PrecisionUnreachable,
         "requested " + std::to_string(digits) + " digits, maximum is " +
             std::to_string(kMaxDigits));
}

BigFloat to_bigfloat(const Rational &q) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat bf_pi() {
  static const BigFloat pi = boost::multiprecision::default_ops::get_constant_pi<
      boost::multiprecision::mpfr_float_backend<80>>();
  return pi;
}

BigFloat ulp_of(const BigFloat &x) {
  static const BigFloat eps = std::numeric_limits<BigFloat>::epsilon();
  return eps * abs(x);
}

Numeric Numeric::exact(const Rational &q) {
  Numeric n;
  n.value = to_bigfloat(q);
  n.err = ulp_of(n.value);
  return n;
}

Numeric Numeric::of(const BigFloat &v, const BigFloat &e) {
  Numeric n;
  n.value = v;
  n.err = abs(e);
  return n;
}

Numeric operator+(const Numeric &a, const Numeric &b) {
  BigFloat v = a.value + b.value;
  return Numeric::of(v, a.err + b.err + ulp_of(v));
}

Numeric operator-(const Numeric &a, const Numeric &b) {
  BigFloat v = a.value - b.value;
  return Numeric::of(v, a.err + b.err + ulp_of(v));
}

Numeric operator-(const Numeric &a) { return Numeric::of(-a.value, a.err); }

Numeric operator*(const Numeric &a, const Numeric &b) {
  BigFloat v = a.value * b.value;
  BigFloat e = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err + ulp_of(v);
  return Numeric::of(v, e);
}

Numeric operator*(const Rational &a, const Numeric &b) {
  return Numeric::exact(a) * b;
}

Numeric operator/(const Numeric &a, const Numeric &b) {
  BigFloat lo = abs(b.value) - b.err;
  if (lo <= 0) fail(ErrorCode::DomainViolation, "division by an interval containing zero");
  BigFloat v = a.value / b.value;
  BigFloat e = (a.err + abs(v) * b.err) / lo + ulp_of(v);
  return Numeric::of(v, e);
}

Numeric pow_int(const Numeric &a, unsigned e) {
  Numeric r = Numeric::exact(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

std::string to_decimal(const BigFloat &x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

std::string err_to_decimal(const BigFloat &e) {
  if (e == 0) return "0";
  double d = static_cast<double>(e);
  if (!std::isfinite(d)) return "inf";
  d = std::nextafter(d * (1.0 + 1e-3), std::numeric_limits<double>::infinity());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", d);
  return buf;
}

namespace {

constexpr long kStirlingShift = 90;

// log Gamma(z) for z >= kStirlingShift, with truncation bound.
void stirling_lgamma(const BigFloat &z, BigFloat &value, BigFloat &tail) {
  static const BigFloat half_log_2pi = log(2 * bf_pi()) / 2;
  static const BigFloat stop = BigFloat("1e-85");
  value = (z - BigFloat(0.5)) * log(z) - z + half_log_2pi;
  BigFloat zpow = z;
  BigFloat z2 = z * z;
  tail = 0;
  for (unsigned k = 1; k < 200; ++k) {
    BigFloat term = to_bigfloat(bernoulli(2 * k)) /
                    (BigFloat(2 * k) * BigFloat(2 * k - 1) * zpow);
    if (abs(term) < stop) {
      tail = abs(term);
      return;
    }
    value += term;
    zpow *= z2;
  }
  tail = BigFloat("1e-60");
}

} // namespace

Numeric gamma_real(const BigFloat &x) {
  if (x <= 0 && x == floor(x))
    fail(ErrorCode::Pole, "Gamma pole at non-positive integer");
  BigFloat z = x;
  BigFloat prod = 1;
  while (z < kStirlingShift) {
    prod *= z;
    z += 1;
  }
  BigFloat lg, tail;
  stirling_lgamma(z, lg, tail);
  BigFloat v = exp(lg) / prod;
  static const BigFloat rounding = BigFloat("1e-76");
  return Numeric::of(v, abs(v) * (2 * tail + rounding));
}

Numeric rgamma_real(const BigFloat &x) {
  if (x <= 0 && x == floor(x)) return Numeric{};
  Numeric g = gamma_real(x);
  return Numeric::exact(Rational(1)) / g;
}

Numeric gamma_rational_numeric(const Rational &r, int digits) {
  check_digits(digits);
  if (r <= 0 || r >= 1)
    fail(ErrorCode::DomainViolation, "gamma_rational_numeric needs 0 < r < 1");
  return gamma_real(to_bigfloat(r));
}

Numeric riemann_zeta_numeric(const BigFloat &s, int digits) {
  check_digits(digits);
  if (s <= 1) fail(ErrorCode::DomainViolation, "riemann_zeta_numeric needs s > 1");
  const long M = 50;
  const BigFloat Mb(M);
  BigFloat sum = 0;
  for (long n = 1; n < M; ++n) sum += pow(BigFloat(n), -s);
  sum += pow(Mb, 1 - s) / (s - 1);
  BigFloat mms = pow(Mb, -s);
  sum += mms / 2;
  // sum_{k} B_2k/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}
  BigFloat rising = s;
  BigFloat fact = 2;
  BigFloat mp = mms / Mb;
  BigFloat bound = 0;
  static const BigFloat stop = BigFloat("1e-82");
  for (unsigned k = 1; k <= 40; ++k) {
    BigFloat term = to_bigfloat(bernoulli(2 * k)) / fact * rising * mp;
    if (abs(term) < stop) {
      bound = 2 * abs(term);
      break;
    }
    sum += term;
    rising *= (s + BigFloat(2 * k - 1)) * (s + BigFloat(2 * k));
    fact *= BigFloat(2 * k + 1) * BigFloat(2 * k + 2);
    mp /= Mb * Mb;
    bound = 2 * abs(term);
  }
  return Numeric::of(sum, bound + ulp_of(sum) * 100);
}

} // namespace mzv

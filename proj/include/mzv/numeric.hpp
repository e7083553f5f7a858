#pragma once

#include "mzv/exactnum.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mzv {

/// 80 decimal digits of working precision (> 256-bit significand).
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<80>, boost::multiprecision::et_off>;

constexpr int kWorkDigits = 80;
constexpr int kMaxDigits = 75;
constexpr int kDefaultDigits = 50;

void check_digits(int digits);

BigFloat to_bigfloat(const Rational &q);
BigFloat bf_pi();
BigFloat ulp_of(const BigFloat &x);

/// value +- err, err >= 0 bounds the absolute error.
struct Numeric {
  BigFloat value{0};
  BigFloat err{0};

  static Numeric exact(const Rational &q);
  static Numeric of(const BigFloat &v, const BigFloat &e = BigFloat(0));
};

Numeric operator+(const Numeric &a, const Numeric &b);
Numeric operator-(const Numeric &a, const Numeric &b);
Numeric operator-(const Numeric &a);
Numeric operator*(const Numeric &a, const Numeric &b);
Numeric operator*(const Rational &a, const Numeric &b);
Numeric operator/(const Numeric &a, const Numeric &b);
Numeric pow_int(const Numeric &a, unsigned e);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const BigFloat &x, int digits = kDefaultDigits);
/// Short upward-rounded rendering for error bounds.
std::string err_to_decimal(const BigFloat &e);

/// Gamma at a rational in (0,1).
Numeric gamma_rational_numeric(const Rational &r, int digits = kDefaultDigits);
/// Gamma at any real that is not a non-positive integer.
Numeric gamma_real(const BigFloat &x);
/// 1/Gamma(x), zero at non-positive integers.
Numeric rgamma_real(const BigFloat &x);

/// zeta(s) for real s > 1.
Numeric riemann_zeta_numeric(const BigFloat &s, int digits = kDefaultDigits);

} // namespace mzv

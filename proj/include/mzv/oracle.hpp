#pragma once

#include "mzv/numeric.hpp"

namespace mzv {

struct EMSettings {
  /// Raised automatically until 2K + d*s > 1 with a margin of 2.
  unsigned K = 8;
  /// Outer m1 cutoff for the two-variable remainder block.
  unsigned truncation = 256;
  int precision = kDefaultDigits;
  /// Gauss-Legendre points per unit interval of the remainder integral.
  unsigned gl_order = 40;
};

/// int_0^inf (b + a x^d)^{-s} dx, s > 1/d.
Numeric beta_integral(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s);

/// f^{(k)}(0) for f(x) = (b + a x^d)^{-s}.
Numeric f_derivative_at0(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s, unsigned k);

struct EMResult {
  Numeric value;
  Numeric remainder;
  unsigned K = 0;
  /// Unit intervals integrated before the tail bound took over.
  unsigned intervals = 0;
};

/// Continuation of sum_{m>=1} (b + a m^d)^{-s}.
EMResult em_inner(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s,
                  const EMSettings &settings = {});
Numeric em_inner_sum(const BigFloat &a, const BigFloat &b, unsigned d, const BigFloat &s,
                     const EMSettings &settings = {});

/// gamma1^{-s} zeta(d1 s) by Euler-Maclaurin.
Numeric zeta1_numeric(unsigned d1, const Rational &gamma1, const BigFloat &s, const EMSettings &settings = {});

struct PowerSum2Result {
  Numeric value;
  Numeric gamma_block, half_block, k_block, remainder_block;
  /// |R| as computed.
  BigFloat residual{0};
  unsigned K = 0;
};

/// Two-variable continuation of zeta_{2,d,gamma}(s1, s2).
PowerSum2Result powersum2_numeric(unsigned d1, unsigned d2, const Rational &gamma1, const Rational &gamma2,
                                  const BigFloat &s1, const BigFloat &s2, const EMSettings &settings = {});

} // namespace mzv

#pragma once

#include "mzv/exactnum.hpp"
#include "mzv/special_value.hpp"

#include <vector>

namespace mzv {

struct PowerSumParams {
  unsigned n = 0;
  std::vector<long> d;
  std::vector<Rational> gamma;

  static PowerSumParams make(std::vector<long> d, std::vector<Rational> gamma = {});
  PowerSumParams prefix(unsigned m) const;
};

struct DirectionalSpec {
  std::vector<long> N;
  std::vector<Rational> theta;
};

bool regularity_ok(const std::vector<long> &d);

struct IraResult {
  bool ok = false;
  long b = 0;
};
IraResult ira_ok(const std::vector<long> &d);

/// zeta_{n,d,gamma}(N) for N in (-N0)^n.
Rational value_nonpositive(const PowerSumParams &params, const std::vector<long> &N);
/// Same recursion allowing positive intermediate arguments; positive base cases are numeric.
SpecialValue value_mixed_last_nonpositive(const PowerSumParams &params, const std::vector<long> &N,
                                          int digits = kDefaultDigits);

Rational closed_zero(const PowerSumParams &params);
Rational closed_last_minus1(const PowerSumParams &params);
Rational closed_last_minus2(const PowerSumParams &params);
/// Value at -N when d_2..d_n are even.
Rational closed_even_tail(const PowerSumParams &params, const std::vector<long> &N);

/// Shifted-product factor of C(N,d), N in N0^n.
Rational A_value(const std::vector<long> &d, const std::vector<long> &N);
Rational B_theta(const std::vector<long> &N, const std::vector<Rational> &theta, long b);
Rational C_value(const std::vector<long> &d, const std::vector<long> &N);
/// C rebuilt from A_value and B_theta; must equal C_value.
Rational C_from_parts(const std::vector<long> &d, const std::vector<long> &N);
Rational H_value(const PowerSumParams &params, const std::vector<long> &N);

struct DirectionalResult {
  SpecialValue value;
  Rational C;
  Rational H;
  Rational theta_ratio;
  bool cross_check = false;
};

DirectionalResult directional_limit(const PowerSumParams &params, const DirectionalSpec &spec,
                                    int digits = kDefaultDigits);

} // namespace mzv

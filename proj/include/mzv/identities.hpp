#pragma once

#include "mzv/exactnum.hpp"

#include <string>
#include <vector>

namespace mzv {

Rational zeta_neg_via_B1(unsigned N);
/// (-1)^N B_{N+1}/(N+1).
Rational zeta_neg_closed(unsigned N);
Rational double_B3(unsigned N1, unsigned N2);
Rational double_B6(unsigned N1, unsigned N2);

struct IdentityReport {
  std::string kind;
  std::vector<unsigned> params;
  Rational lhs, rhs;
  bool equal = false;
  double elapsed_ms = 0;
};

struct IdentityGrid {
  std::vector<IdentityReport> pairs;
  std::vector<IdentityReport> singles;
  bool all_equal() const;
};

/// B3 vs B6 on [0,maxN1]x[0,maxN2], B1 vs closed form for N <= maxN1+maxN2.
IdentityGrid verify_identity_grid(unsigned maxN1, unsigned maxN2);

/// sum_{k<=a} C(a,k) B_k == (-1)^a B_a.
bool bernoulli_sum_identity(unsigned a);

} // namespace mzv

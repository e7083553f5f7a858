#pragma once

#include "mzv/mahler.hpp"

#include <string>
#include <vector>

namespace mzv {

struct HypothesisFlags {
  /// Per P_j: positivity on sampled [1,inf)^j.
  std::vector<Certainty> positivity;
  /// Per P_j, j < n: growth heuristic.
  std::vector<bool> h0s_pass;
  std::vector<bool> h0s_warning;
  Certainty ellipticity = Certainty::Certified;
  /// True when any hypothesis rests on sampling only.
  bool unverified = false;
  std::vector<std::string> notes;
};

/// P_j is a polynomial in j variables.
struct PolyFamily {
  std::vector<MPoly> P;
  HypothesisFlags flags;
  bool validated = false;

  unsigned n() const { return static_cast<unsigned>(P.size()); }
};

/// Checks the family and fills its flags; throws HypothesisViolated on a definite failure.
void validate(PolyFamily &family);

struct QN {
  MPoly Q;
  unsigned q = 0;
};
QN build_QN(const PolyFamily &family, const std::vector<unsigned> &N);

struct PolyZetaResult {
  SpecialValue value;
  HypothesisFlags flags;
};

PolyZetaResult zeta_P_at(PolyFamily family, const std::vector<unsigned> &N,
                         const QuadratureSettings &qs = {});

struct GammaFactorSpec {
  unsigned m = 0;
  std::vector<Rational> mu;
};

Numeric G_factor(const GammaFactorSpec &spec, const QuadratureSettings &qs = {});

/// Diagonal P_n = X_1^d + ... + X_n^d; returns d or throws NotDiagonal.
unsigned diagonal_degree(const MPoly &P);
SpecialValue diagonal_value(PolyFamily family, const std::vector<unsigned> &N,
                            const QuadratureSettings &qs = {});

} // namespace mzv

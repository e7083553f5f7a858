#pragma once

#include "mzv/mpoly.hpp"
#include "mzv/positivity.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/special_value.hpp"

#include <map>
#include <vector>

namespace mzv {

/// Sum of d_m prod (1+a_i)^{m_i}.
struct YExpansion {
  unsigned nvars = 0;
  std::map<MultiIndex, SpecialValue> coeffs;
};

/// One (k, gamma, count) entry of a composition family.
struct FamilyEntry {
  unsigned k;
  MultiIndex gamma;
  unsigned count;
};

/// Builds u from sparse entries; every other u_{k,gamma} is zero.
CompositionFamily family_from_entries(unsigned d, unsigned n, const std::vector<FamilyEntry> &entries);
/// alpha_k = |u_k|.
MultiIndex alpha_of(const CompositionFamily &u);

SpecialValue period_K(const MPoly &P, const MPoly &Q, unsigned N, const MultiIndex &alpha,
                      const CompositionFamily &u, const MultiIndex &beta, unsigned i,
                      const QuadratureSettings &qs = {});

struct MahlerReport {
  SpecialValue value;
  Certainty ellipticity = Certainty::Certified;
  std::string ellipticity_detail;
  size_t terms = 0;
  size_t integrals = 0;
};

/// Z(P,Q;-N); an uncertified ellipticity check throws unless allow_unverified.
MahlerReport Z_report(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs = {},
                      bool allow_unverified = false);
SpecialValue Z_value(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs = {});

YExpansion Y_expansion(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs = {});
SpecialValue Y_value(const MPoly &P, const MPoly &Q, unsigned N, const std::vector<Rational> &a,
                     const QuadratureSettings &qs = {});
SpecialValue raabe_substitute(const YExpansion &exp);

} // namespace mzv

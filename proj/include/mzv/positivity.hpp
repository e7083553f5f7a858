#pragma once

#include "mzv/mpoly.hpp"

#include <string>
#include <vector>

namespace mzv {

enum class Certainty { Certified, SampledOnly, Violated };
enum class PositivityMode { Sampled, Bernstein };
/// [0,1]^m or [1,inf)^m.
enum class PositivityDomain { UnitCube, UnboundedBox };

struct PositivityResult {
  Certainty status = Certainty::SampledOnly;
  std::vector<Rational> witness;
  std::string detail;
};

const char *certainty_name(Certainty c);

/// Tensor Bernstein coefficients of p on [0,1]^m, row-major in the per-variable degrees.
std::vector<Rational> bernstein_coefficients(const MPoly &p, std::vector<unsigned> &degrees);

PositivityResult positivity_check(const MPoly &p, PositivityDomain domain,
                                  PositivityMode mode = PositivityMode::Bernstein,
                                  unsigned samples_per_dim = 32, unsigned max_depth = 10);

/// Positivity of P on face i, i.e. of P(y-hat(i)) on [0,1]^{n-1}.
PositivityResult face_positivity(const MPoly &p, unsigned i,
                                 PositivityMode mode = PositivityMode::Bernstein);

/// All faces certified -> Certified; any violation -> Violated.
PositivityResult ellipticity_check(const MPoly &p);

struct H0SResult {
  bool pass = false;
  bool warning = false;
  std::vector<Rational> witness;
  std::vector<double> sup_by_radius;
  std::string detail;
};

/// Non-certifying probe of sup |d^a P / P| on growing boxes [1,R]^j.
H0SResult h0s_heuristic(const MPoly &p, unsigned max_order, unsigned box_samples = 9,
                        unsigned max_radius = 8);

} // namespace mzv

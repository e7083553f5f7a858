#pragma once

#include "mzv/numeric.hpp"

#include <functional>
#include <vector>

namespace mzv {

struct QuadratureSettings {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  unsigned max_subdivisions = 20000;
  /// Gauss-Legendre order; the error estimate compares against order (order+1)/2.
  unsigned order = 15;
  int precision = kDefaultDigits;
};

void validate(const QuadratureSettings &qs);

struct QuadResult {
  long double value = 0;
  long double err = 0;
  bool converged = true;
  unsigned cells = 0;
};

using Integrand = std::function<long double(const long double *)>;

/// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre01(unsigned order, std::vector<long double> &nodes,
                      std::vector<long double> &weights);

/// Adaptive tensor Gauss-Legendre over [0,1]^dim; dim 0 evaluates f once.
QuadResult integrate_cube(const Integrand &f, unsigned dim, const QuadratureSettings &qs);

/// Fixed-order rule on [a,b].
long double integrate_interval(const std::function<long double(long double)> &f, long double a,
                               long double b, unsigned order);

/// Number of worker threads from MZV_THREADS, defaulting to hardware concurrency.
unsigned worker_count();

/// Runs jobs[0..n) on worker threads; results land in index order.
void parallel_for(size_t n, const std::function<void(size_t)> &job);

} // namespace mzv

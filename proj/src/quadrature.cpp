#include "mzv/quadrature.hpp"

#include "mzv/error.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <thread>

namespace mzv {

void validate(const QuadratureSettings &qs) {
  if (!(qs.rel_tol > 0) || !(qs.abs_tol > 0))
    fail(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  if (qs.order < 3 || qs.order > 64) fail(ErrorCode::InvalidArgument, "quadrature order must lie in [3,64]");
  if (qs.max_subdivisions == 0) fail(ErrorCode::InvalidArgument, "max_subdivisions must be positive");
  check_digits(qs.precision);
}

namespace {

struct Rule {
  std::vector<long double> x, w;
};

const Rule &rule(unsigned order) {
  static std::mutex mu;
  static std::map<unsigned, Rule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  Rule r;
  const long double pi = 3.141592653589793238462643383279502884L;
  unsigned n = order;
  r.x.resize(n);
  r.w.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    long double z = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p1 = 1, p2 = 0;
      for (unsigned j = 1; j <= n; ++j) {
        long double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      long double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    r.x[i] = (1 - z) / 2;
    r.w[i] = 1 / ((1 - z * z) * pp * pp);
  }
  return cache.emplace(order, std::move(r)).first->second;
}

struct Cell {
  std::vector<long double> lo;
  long double width;
  long double value, err;
  bool operator<(const Cell &o) const { return err < o.err; }
};

long double tensor(const Integrand &f, const Rule &r, const std::vector<long double> &lo,
                   long double width, unsigned dim) {
  unsigned n = static_cast<unsigned>(r.x.size());
  size_t total = 1;
  for (unsigned k = 0; k < dim; ++k) total *= n;
  std::vector<unsigned> idx(dim, 0);
  long double pt[8];
  long double sum = 0;
  for (size_t flat = 0; flat < total; ++flat) {
    long double w = 1;
    for (unsigned k = 0; k < dim; ++k) {
      pt[k] = lo[k] + width * r.x[idx[k]];
      w *= r.w[idx[k]];
    }
    sum += w * f(pt);
    for (unsigned k = 0; k < dim; ++k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  long double vol = 1;
  for (unsigned k = 0; k < dim; ++k) vol *= width;
  return sum * vol;
}

void evaluate(const Integrand &f, Cell &c, unsigned dim, const Rule &hi, const Rule &lo) {
  long double a = tensor(f, hi, c.lo, c.width, dim);
  long double b = tensor(f, lo, c.lo, c.width, dim);
  c.value = a;
  c.err = std::fabs(a - b) + 64 * std::numeric_limits<long double>::epsilon() * std::fabs(a);
}

} // namespace

void gauss_legendre01(unsigned order, std::vector<long double> &nodes,
                      std::vector<long double> &weights) {
  const Rule &r = rule(order);
  nodes = r.x;
  weights = r.w;
}

QuadResult integrate_cube(const Integrand &f, unsigned dim, const QuadratureSettings &qs) {
  validate(qs);
  QuadResult res;
  if (dim == 0) {
    res.value = f(nullptr);
    res.err = 0;
    res.cells = 1;
    return res;
  }
  if (dim > 8) fail(ErrorCode::InvalidArgument, "quadrature supports at most 8 dimensions");
  const Rule &hi = rule(qs.order);
  const Rule &lo = rule((qs.order + 1) / 2);
  std::priority_queue<Cell> heap;
  Cell root{std::vector<long double>(dim, 0), 1, 0, 0};
  evaluate(f, root, dim, hi, lo);
  long double total = root.value, total_err = root.err;
  heap.push(root);
  unsigned cells = 1;
  unsigned children = 1u << dim;
  while (true) {
    long double target = std::max<long double>(qs.abs_tol, qs.rel_tol * std::fabs(total));
    if (total_err <= target) break;
    if (cells + children > qs.max_subdivisions) {
      res.converged = false;
      break;
    }
    Cell c = heap.top();
    heap.pop();
    total -= c.value;
    total_err -= c.err;
    long double half = c.width / 2;
    for (unsigned k = 0; k < children; ++k) {
      Cell ch{c.lo, half, 0, 0};
      for (unsigned j = 0; j < dim; ++j)
        if (k & (1u << j)) ch.lo[j] += half;
      evaluate(f, ch, dim, hi, lo);
      total += ch.value;
      total_err += ch.err;
      heap.push(std::move(ch));
    }
    cells += children;
  }
  // resum to limit drift from the running totals
  long double v = 0, e = 0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().err;
    heap.pop();
  }
  res.value = v;
  res.err = e + 16 * std::numeric_limits<long double>::epsilon() * std::fabs(v) * cells;
  res.cells = cells;
  return res;
}

long double integrate_interval(const std::function<long double(long double)> &f, long double a,
                               long double b, unsigned order) {
  const Rule &r = rule(order);
  long double s = 0;
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(a + (b - a) * r.x[i]);
  return s * (b - a);
}

unsigned worker_count() {
  if (const char *env = std::getenv("MZV_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

void parallel_for(size_t n, const std::function<void(size_t)> &job) {
  unsigned workers = static_cast<unsigned>(std::min<size_t>(worker_count(), n));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

} // namespace mzv

#include "mzv/polyzeta.hpp"

#include "mzv/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mzv {

namespace {

MPoly lift(const MPoly &p, unsigned n) {
  MPoly r = p;
  while (r.nvars() < n) r = embed(r, r.nvars() + 1);
  return r;
}

std::string witness_text(const std::vector<Rational> &w) {
  std::string s;
  for (auto &x : w) s += (s.empty() ? "" : ",") + rational_to_string(x);
  return "(" + s + ")";
}

} // namespace

void validate(PolyFamily &family) {
  unsigned n = family.n();
  if (n == 0) fail(ErrorCode::InvalidArgument, "family must contain at least one polynomial");
  HypothesisFlags f;
  for (unsigned j = 1; j <= n; ++j) {
    const MPoly &p = family.P[j - 1];
    if (p.nvars() != j)
      fail(ErrorCode::DimensionMismatch, "P_" + std::to_string(j) + " must have " + std::to_string(j) + " variables");
    PositivityResult r = positivity_check(p, PositivityDomain::UnboundedBox, PositivityMode::Sampled);
    if (r.status == Certainty::Violated)
      fail(ErrorCode::HypothesisViolated,
           "P_" + std::to_string(j) + " is not positive on [1,inf)^j at " + witness_text(r.witness));
    f.positivity.push_back(r.status);
    if (j < n) {
      unsigned order = static_cast<unsigned>(std::max(1, p.degree()));
      H0SResult h = h0s_heuristic(p, order);
      f.h0s_pass.push_back(h.pass);
      f.h0s_warning.push_back(h.warning);
      if (!h.pass) {
        f.unverified = true;
        f.notes.push_back("P_" + std::to_string(j) + ": " + h.detail);
      } else if (h.warning) {
        f.notes.push_back("P_" + std::to_string(j) + ": " + h.detail);
      }
    }
  }
  const MPoly &Pn = family.P[n - 1];
  auto deg = homogeneous_degree(Pn);
  if (!deg || Pn.is_zero() || *deg < 1)
    fail(ErrorCode::HypothesisViolated, "P_n must be homogeneous of degree at least 1");
  PositivityResult e = ellipticity_check(Pn);
  if (e.status == Certainty::Violated)
    fail(ErrorCode::HypothesisViolated, "P_n is not elliptic: " + e.detail + " at " + witness_text(e.witness));
  f.ellipticity = e.status;
  if (e.status == Certainty::SampledOnly) {
    f.unverified = true;
    f.notes.push_back("P_n: " + e.detail);
  }
  family.flags = f;
  family.validated = true;
}

QN build_QN(const PolyFamily &family, const std::vector<unsigned> &N) {
  unsigned n = family.n();
  if (N.size() != n) fail(ErrorCode::DimensionMismatch, "N must have one entry per polynomial");
  QN out;
  out.Q = MPoly::constant(n, Rational(1));
  for (unsigned j = 0; j < n; ++j) {
    if (N[j] == 0) continue;
    out.Q = out.Q * lift(family.P[j], n).pow(N[j]);
    out.q += N[j] * static_cast<unsigned>(std::max(0, family.P[j].degree()));
  }
  return out;
}

PolyZetaResult zeta_P_at(PolyFamily family, const std::vector<unsigned> &N, const QuadratureSettings &qs) {
  if (!family.validated) validate(family);
  QN qn = build_QN(family, N);
  PolyZetaResult res;
  MahlerReport rep = Z_report(family.P.back(), qn.Q, 0, qs, true);
  res.value = rep.value;
  res.flags = family.flags;
  return res;
}

Numeric G_factor(const GammaFactorSpec &spec, const QuadratureSettings &qs) {
  validate(qs);
  unsigned dim = static_cast<unsigned>(spec.mu.size());
  std::vector<long> p(dim), q(dim);
  for (unsigned k = 0; k < dim; ++k) {
    if (spec.mu[k] <= 0) fail(ErrorCode::DomainViolation, "mu entries must be positive");
    p[k] = spec.mu[k].get_num().get_si();
    q[k] = spec.mu[k].get_den().get_si();
  }
  if (dim == 0) return Numeric::exact(Rational(1));
  long double jac = 1;
  for (unsigned k = 0; k < dim; ++k) jac *= q[k];
  unsigned m = spec.m;
  Integrand f = [&](const long double *u) {
    long double num = jac, den = 1;
    for (unsigned k = 0; k < dim; ++k) {
      num *= std::pow(u[k], static_cast<long double>(p[k] - 1));
      den += std::pow(u[k], static_cast<long double>(q[k]));
    }
    long double w = 1;
    for (unsigned t = 0; t < m; ++t) w *= den;
    return num / w;
  };
  QuadResult r = integrate_cube(f, dim, qs);
  if (!r.converged)
    fail(ErrorCode::QuadratureDidNotConverge, "generalized gamma factor quadrature did not converge");
  return Numeric::of(BigFloat(r.value), BigFloat(r.err));
}

unsigned diagonal_degree(const MPoly &P) {
  unsigned n = P.nvars();
  if (P.terms().size() != n) fail(ErrorCode::NotDiagonal, "P_n must be X_1^d + ... + X_n^d");
  unsigned d = 0;
  for (auto &[e, c] : P.terms()) {
    if (c != 1) fail(ErrorCode::NotDiagonal, "P_n must have unit coefficients");
    unsigned nz = 0, deg = 0;
    for (unsigned x : e)
      if (x) {
        ++nz;
        deg = x;
      }
    if (nz != 1 || (d && deg != d)) fail(ErrorCode::NotDiagonal, "P_n must be X_1^d + ... + X_n^d");
    d = deg;
  }
  if (d == 0) fail(ErrorCode::NotDiagonal, "P_n must have positive degree");
  return d;
}

SpecialValue diagonal_value(PolyFamily family, const std::vector<unsigned> &N, const QuadratureSettings &qs) {
  validate(qs);
  unsigned n = family.n();
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty family");
  unsigned d = diagonal_degree(family.P.back());
  if (!family.validated) validate(family);
  QN qn = build_QN(family, N);

  std::map<std::pair<unsigned, std::vector<Rational>>, Numeric> cache;
  auto G = [&](unsigned m, std::vector<Rational> mu) {
    std::sort(mu.begin(), mu.end());
    auto key = std::make_pair(m, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Numeric v = G_factor({m, mu}, qs);
    cache.emplace(key, v);
    return v;
  };

  Rational dn = pow_rational(Rational(d), n);
  std::vector<Integer> cdk(d + 1);
  for (unsigned k = 1; k <= d; ++k) cdk[k] = binom_signed(d, k);

  Rational exact_part(0);
  Numeric numeric_part = Numeric::exact(Rational(0));
  bool any_numeric = false;

  for (auto &[beta, qcoef] : qn.Q.terms()) {
    std::vector<MultiIndex> nus;
    for (auto &nu : indices_up_to(abs_index(beta), n))
      if (index_leq(nu, beta)) nus.push_back(nu);
    for (auto &nu : nus) {
      Rational cbn(1);
      for (unsigned i = 0; i < n; ++i) cbn *= Rational(binom_signed(beta[i], nu[i]));
      for (auto &alpha : weighted_partitions(abs_index(nu) + n, d)) {
        unsigned a = abs_index(alpha);
        Rational base = Rational(factorial(a - 1)) * cbn * qcoef / dn;
        if (a % 2 == 1) base = -base;
        // gamma^k ranges over weak compositions of alpha_k into n parts
        std::vector<std::vector<MultiIndex>> choices;
        for (unsigned k = 1; k <= d; ++k) choices.push_back(weak_compositions(alpha[k - 1], n));
        std::vector<size_t> pick(d, 0);
        while (true) {
          Rational c = base;
          MultiIndex idx(n, 0);
          std::vector<Rational> num(n);
          for (unsigned j = 0; j < n; ++j) num[j] = Rational(1 + nu[j]);
          for (unsigned k = 1; k <= d; ++k) {
            const MultiIndex &gk = choices[k - 1][pick[k - 1]];
            c /= Rational(factorial_index(gk));
            for (unsigned j = 0; j < n; ++j) {
              if (gk[j]) c *= pow_rational(Rational(cdk[k]), gk[j]);
              idx[j] += k * gk[j];
              num[j] += Rational((d - k) * gk[j]);
            }
          }
          for (unsigned j = 0; j < n; ++j) c *= bernoulli_tilde(beta[j] - nu[j] + idx[j]);
          if (c != 0) {
            if (n == 1) {
              exact_part += c;
            } else {
              Numeric gs = Numeric::exact(Rational(0));
              for (unsigned i = 0; i < n; ++i) {
                std::vector<Rational> mu;
                for (unsigned j = 0; j < n; ++j)
                  if (j != i) mu.push_back(num[j] / d);
                gs = gs + G(a, mu);
              }
              numeric_part = numeric_part + c * gs;
              any_numeric = true;
            }
          }
          unsigned k = 0;
          while (k < d && ++pick[k] == choices[k].size()) pick[k++] = 0;
          if (k == d) break;
        }
      }
    }
  }
  if (!any_numeric) return SpecialValue(exact_part);
  return SpecialValue(numeric_part + Numeric::exact(exact_part));
}

} // namespace mzv

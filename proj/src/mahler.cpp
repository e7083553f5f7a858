#include "mzv/mahler.hpp"

#include "mzv/error.hpp"

#include <algorithm>

namespace mzv {

CompositionFamily family_from_entries(unsigned d, unsigned n, const std::vector<FamilyEntry> &entries) {
  CompositionFamily u;
  for (unsigned k = 1; k <= d; ++k) u.u.emplace_back(delta_set(k, n).size(), 0);
  for (auto &e : entries) {
    if (e.k < 1 || e.k > d) fail(ErrorCode::CompositionMismatch, "block index k out of range");
    if (e.gamma.size() != n || abs_index(e.gamma) != e.k)
      fail(ErrorCode::CompositionMismatch, "gamma must lie in Delta_k^n");
    const auto &delta = delta_set(e.k, n);
    auto it = std::find(delta.begin(), delta.end(), e.gamma);
    u.u[e.k - 1][static_cast<size_t>(it - delta.begin())] += e.count;
  }
  return u;
}

MultiIndex alpha_of(const CompositionFamily &u) {
  MultiIndex a;
  for (auto &blk : u.u) a.push_back(abs_index(blk));
  return a;
}

namespace {

struct Setup {
  unsigned n = 0, d = 0;
  /// faces[i-1][k-1][t] = face_i(d^gamma P)/gamma!, gamma = delta_set(k,n)[t]
  std::vector<std::vector<std::vector<MPoly>>> faces;
  std::vector<MPoly> pface;
};

Setup make_setup(const MPoly &P) {
  Setup s;
  s.n = P.nvars();
  if (s.n == 0) fail(ErrorCode::InvalidArgument, "P must have at least one variable");
  auto deg = homogeneous_degree(P);
  if (!deg || P.is_zero()) fail(ErrorCode::NotHomogeneous, "P must be homogeneous");
  if (*deg < 1) fail(ErrorCode::NotHomogeneous, "P must have degree at least 1");
  s.d = *deg;
  for (unsigned i = 1; i <= s.n; ++i) {
    s.pface.push_back(face(P, i));
    std::vector<std::vector<MPoly>> per_k;
    for (unsigned k = 1; k <= s.d; ++k) {
      std::vector<MPoly> row;
      for (auto &g : delta_set(k, s.n)) {
        MPoly f = face(derivative(P, g), i);
        f *= Rational(1) / Rational(factorial_index(g));
        row.push_back(std::move(f));
      }
      per_k.push_back(std::move(row));
    }
    s.faces.push_back(std::move(per_k));
  }
  return s;
}

/// prod_k prod_gamma faces^u; zero polynomial when a used factor vanishes.
MPoly face_product(const Setup &s, unsigned i, const CompositionFamily &u) {
  MPoly r = MPoly::constant(s.n - 1, Rational(1));
  for (unsigned k = 1; k <= u.u.size(); ++k)
    for (size_t t = 0; t < u.u[k - 1].size(); ++t) {
      unsigned c = u.u[k - 1][t];
      if (!c) continue;
      const MPoly &f = s.faces[i - 1][k - 1][t];
      if (f.is_zero()) return MPoly(s.n - 1);
      r = r * f.pow(c);
    }
  return r;
}

Integer u_factorial(const CompositionFamily &u) {
  Integer r(1);
  for (auto &blk : u.u)
    for (unsigned c : blk) r *= factorial(c);
  return r;
}

/// numer[(i, e)] summed over terms sharing a basis exponent m.
using FaceSums = std::map<std::pair<unsigned, unsigned>, MPoly>;

struct Collected {
  std::map<MultiIndex, FaceSums> by_m;
  size_t terms = 0;
};

/// Collects all (beta, alpha, u) terms of the triple sum for a homogeneous Q.
/// With fold_bernoulli the Bernoulli product is multiplied in and everything lands under one key.
void collect(const Setup &s, const MPoly &Qc, unsigned q, unsigned N, bool fold_bernoulli,
             Collected &out) {
  unsigned n = s.n, d = s.d;
  Integer nfact = factorial(N);
  for (auto &beta : indices_up_to(q, n)) {
    MPoly dq = derivative(Qc, beta);
    if (dq.is_zero()) continue;
    std::vector<MPoly> dq_face;
    for (unsigned i = 1; i <= n; ++i) dq_face.push_back(face(dq, i));
    Rational beta_fact(factorial_index(beta));
    for (auto &alpha : index_I(N, beta, d, q, n)) {
      unsigned a = abs_index(alpha);
      if (a <= N) fail(ErrorCode::InvalidArgument, "internal: |alpha| <= N in the value formula");
      unsigned e = a - N;
      Rational base = Rational(factorial(e - 1) * nfact) / (Rational(d) * beta_fact);
      if (e % 2 == 1) base = -base;
      for (auto &u : enumerate_V(alpha, n)) {
        MultiIndex g = g_vector(u, n);
        MultiIndex m = add_index(g, beta);
        if (abs_index(m) != d * N + q + n)
          fail(ErrorCode::InvalidArgument, "internal: degree bookkeeping failed");
        Rational c = base / Rational(u_factorial(u));
        if (fold_bernoulli) {
          for (unsigned t = 0; t < n; ++t) c *= bernoulli_tilde(m[t]);
          if (c == 0) continue;
        }
        MultiIndex key = fold_bernoulli ? MultiIndex(n, 0) : m;
        for (unsigned i = 1; i <= n; ++i) {
          if (dq_face[i - 1].is_zero()) continue;
          MPoly prod = face_product(s, i, u);
          if (prod.is_zero()) continue;
          MPoly term = prod * dq_face[i - 1];
          term *= c;
          auto &slot = out.by_m[key];
          auto it = slot.find({i, e});
          if (it == slot.end())
            slot.emplace(std::make_pair(i, e), term);
          else
            it->second += term;
          ++out.terms;
        }
      }
    }
  }
}

Collected collect_all(const Setup &s, const MPoly &Q, unsigned N, bool fold_bernoulli) {
  if (Q.nvars() != s.n) fail(ErrorCode::DimensionMismatch, "P and Q must have the same variables");
  Collected out;
  for (auto &[q, Qc] : homogeneous_components(Q)) collect(s, Qc, q, N, fold_bernoulli, out);
  return out;
}

struct FaceIntegral {
  unsigned i;
  std::vector<std::pair<unsigned, MPoly>> numer;
};

/// integral over [0,1]^{n-1} of sum_e numer_e / P_face^e.
SpecialValue integrate_face(const Setup &s, const FaceIntegral &fi, const QuadratureSettings &qs) {
  const MPoly &pf = s.pface[fi.i - 1];
  if (s.n == 1) {
    Rational p = pf.eval({}), acc(0);
    if (p == 0) fail(ErrorCode::NotElliptic, "face value vanishes");
    for (auto &[e, num] : fi.numer) acc += num.eval({}) / pow_rational(p, e);
    return SpecialValue(acc);
  }
  CompiledPoly cp(pf);
  std::vector<std::pair<unsigned, CompiledPoly>> cn;
  unsigned emax = 0;
  for (auto &[e, num] : fi.numer) {
    cn.emplace_back(e, CompiledPoly(num));
    emax = std::max(emax, e);
  }
  Integrand f = [&](const long double *y) {
    long double p = cp(y);
    long double inv = 1 / p;
    long double acc = 0;
    for (auto &[e, c] : cn) {
      long double w = 1;
      for (unsigned t = 0; t < e; ++t) w *= inv;
      acc += c(y) * w;
    }
    return acc;
  };
  QuadResult r = integrate_cube(f, s.n - 1, qs);
  if (!r.converged)
    fail(ErrorCode::QuadratureDidNotConverge,
         "quadrature did not reach the requested tolerance within " + std::to_string(qs.max_subdivisions) +
             " cells");
  return SpecialValue(Numeric::of(BigFloat(r.value), BigFloat(r.err)));
}

std::vector<FaceIntegral> split_faces(const FaceSums &sums) {
  std::vector<FaceIntegral> out;
  for (auto &[key, poly] : sums) {
    if (poly.is_zero()) continue;
    if (out.empty() || out.back().i != key.first) out.push_back({key.first, {}});
    out.back().numer.emplace_back(key.second, poly);
  }
  return out;
}

SpecialValue integrate_sums(const Setup &s, const FaceSums &sums, const QuadratureSettings &qs,
                            size_t &integrals) {
  auto faces = split_faces(sums);
  std::vector<SpecialValue> parts(faces.size());
  parallel_for(faces.size(), [&](size_t k) { parts[k] = integrate_face(s, faces[k], qs); });
  integrals += faces.size();
  SpecialValue acc;
  for (auto &p : parts) acc += p;
  return acc;
}

void certify(const MPoly &P, bool allow_unverified, MahlerReport *rep) {
  PositivityResult r = ellipticity_check(P);
  if (r.status == Certainty::Violated) {
    std::string w;
    for (auto &x : r.witness) w += (w.empty() ? "" : ",") + rational_to_string(x);
    fail(ErrorCode::NotElliptic, "P is not positive on its faces: " + r.detail + " at (" + w + ")");
  }
  if (r.status == Certainty::SampledOnly && !allow_unverified)
    fail(ErrorCode::PositivityUnverified, "face positivity could not be certified: " + r.detail);
  if (rep) {
    rep->ellipticity = r.status;
    rep->ellipticity_detail = r.detail;
  }
}

} // namespace

SpecialValue period_K(const MPoly &P, const MPoly &Q, unsigned N, const MultiIndex &alpha,
                      const CompositionFamily &u, const MultiIndex &beta, unsigned i,
                      const QuadratureSettings &qs) {
  validate(qs);
  unsigned n = P.nvars();
  if (Q.nvars() != n || beta.size() != n) fail(ErrorCode::DimensionMismatch, "P, Q and beta must share n");
  if (i < 1 || i > n) fail(ErrorCode::IndexOutOfRange, "face index out of range");
  PositivityResult pr = face_positivity(P, i);
  if (pr.status == Certainty::Violated) fail(ErrorCode::NotElliptic, "face polynomial is not positive");
  if (pr.status == Certainty::SampledOnly)
    fail(ErrorCode::PositivityUnverified, "face positivity could not be certified");
  MPoly pau = build_P_alpha_u(P, i, alpha, u);
  MPoly num = pau * face(derivative(Q, beta), i);
  Setup s;
  s.n = n;
  s.pface.push_back(face(P, i));
  FaceIntegral fi{1, {}};
  long expo = static_cast<long>(N) - static_cast<long>(abs_index(alpha));
  if (num.is_zero()) return SpecialValue(Rational(0));
  if (expo >= 0) {
    num = num * s.pface[0].pow(static_cast<unsigned>(expo));
    fi.numer.emplace_back(0, num);
  } else {
    fi.numer.emplace_back(static_cast<unsigned>(-expo), num);
  }
  return integrate_face(s, fi, qs);
}

MahlerReport Z_report(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs,
                      bool allow_unverified) {
  validate(qs);
  Setup s = make_setup(P);
  MahlerReport rep;
  certify(P, allow_unverified, &rep);
  Collected c = collect_all(s, Q, N, true);
  rep.terms = c.terms;
  for (auto &[m, sums] : c.by_m) rep.value += integrate_sums(s, sums, qs, rep.integrals);
  return rep;
}

SpecialValue Z_value(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs) {
  return Z_report(P, Q, N, qs).value;
}

YExpansion Y_expansion(const MPoly &P, const MPoly &Q, unsigned N, const QuadratureSettings &qs) {
  validate(qs);
  Setup s = make_setup(P);
  certify(P, false, nullptr);
  Collected c = collect_all(s, Q, N, false);
  YExpansion y;
  y.nvars = s.n;
  size_t integrals = 0;
  for (auto &[m, sums] : c.by_m) {
    SpecialValue v = integrate_sums(s, sums, qs, integrals);
    if (v.is_exact() && v.exact() == 0) continue;
    y.coeffs.emplace(m, v);
  }
  return y;
}

SpecialValue Y_value(const MPoly &P, const MPoly &Q, unsigned N, const std::vector<Rational> &a,
                     const QuadratureSettings &qs) {
  if (a.size() != P.nvars()) fail(ErrorCode::DimensionMismatch, "a must have length n");
  for (auto &x : a)
    if (x < 0) fail(ErrorCode::DomainViolation, "shift a must be non-negative");
  YExpansion y = Y_expansion(P, Q, N, qs);
  SpecialValue acc;
  for (auto &[m, v] : y.coeffs) {
    Rational w(1);
    for (size_t k = 0; k < m.size(); ++k) w *= pow_rational(Rational(1) + a[k], m[k]);
    acc += w * v;
  }
  return acc;
}

SpecialValue raabe_substitute(const YExpansion &exp) {
  SpecialValue acc;
  for (auto &[m, v] : exp.coeffs) {
    Rational w(1);
    for (unsigned k : m) w *= bernoulli_tilde(k);
    if (w == 0) continue;
    acc += w * v;
  }
  return acc;
}

} // namespace mzv

#include "mzv/positivity.hpp"

#include "mzv/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mzv {

const char *certainty_name(Certainty c) {
  switch (c) {
  case Certainty::Certified: return "certified";
  case Certainty::SampledOnly: return "sampled";
  case Certainty::Violated: return "violated";
  }
  return "unknown";
}

std::vector<Rational> bernstein_coefficients(const MPoly &p, std::vector<unsigned> &degrees) {
  unsigned m = p.nvars();
  degrees.assign(m, 0);
  for (auto &[e, c] : p.terms())
    for (unsigned k = 0; k < m; ++k) degrees[k] = std::max(degrees[k], e[k]);
  size_t total = 1;
  for (unsigned k = 0; k < m; ++k) total *= degrees[k] + 1;
  std::vector<Rational> out(total, Rational(0));
  MultiIndex idx(m, 0);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (unsigned k = m; k-- > 0;) {
      idx[k] = static_cast<unsigned>(rem % (degrees[k] + 1));
      rem /= degrees[k] + 1;
    }
    Rational b(0);
    for (auto &[e, c] : p.terms()) {
      if (!index_leq(e, idx)) continue;
      Rational w = c;
      for (unsigned k = 0; k < m; ++k)
        if (e[k])
          w *= Rational(binom_signed(idx[k], e[k])) / Rational(binom_signed(degrees[k], e[k]));
      b += w;
    }
    out[flat] = b;
  }
  return out;
}

namespace {

struct Box {
  std::vector<Rational> lo, w;
  unsigned depth;
};

bool is_vertex(size_t flat, const std::vector<unsigned> &deg, std::vector<Rational> &corner,
               const Box &box) {
  unsigned m = static_cast<unsigned>(deg.size());
  corner.assign(m, Rational(0));
  for (unsigned k = m; k-- > 0;) {
    unsigned v = static_cast<unsigned>(flat % (deg[k] + 1));
    flat /= deg[k] + 1;
    if (v != 0 && v != deg[k]) return false;
    corner[k] = box.lo[k] + (v == 0 ? Rational(0) : box.w[k]);
  }
  return true;
}

PositivityResult sampled_unit(const MPoly &p, unsigned per_dim) {
  unsigned m = p.nvars();
  PositivityResult r;
  if (m == 0) {
    Rational v = p.eval({});
    r.status = v > 0 ? Certainty::Certified : Certainty::Violated;
    return r;
  }
  CompiledPoly cp(p);
  unsigned g = std::max(2u, per_dim);
  size_t total = 1;
  for (unsigned k = 0; k < m; ++k) {
    total *= g;
    if (total > (1u << 21)) break;
  }
  std::vector<long double> x(m);
  std::vector<unsigned> idx(m);
  auto check = [&](const std::vector<Rational> &pt) {
    if (p.eval(pt) <= 0) {
      r.status = Certainty::Violated;
      r.witness = pt;
      return false;
    }
    return true;
  };
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (unsigned k = 0; k < m; ++k) {
      idx[k] = static_cast<unsigned>(rem % g);
      rem /= g;
      x[k] = static_cast<long double>(idx[k]) / (g - 1);
    }
    if (cp(x.data()) <= 1e-12L) {
      std::vector<Rational> pt(m);
      for (unsigned k = 0; k < m; ++k) pt[k] = make_rational(idx[k], g - 1);
      if (!check(pt)) return r;
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (unsigned t = 0; t < 256; ++t) {
    std::vector<Rational> pt(m);
    for (unsigned k = 0; k < m; ++k) {
      pt[k] = make_rational(static_cast<long>(rng() % 1000003), 1000003);
      x[k] = pt[k].get_d();
    }
    if (cp(x.data()) <= 1e-12L && !check(pt)) return r;
  }
  r.status = Certainty::SampledOnly;
  return r;
}

PositivityResult sampled_unbounded(const MPoly &p, unsigned per_dim) {
  unsigned m = p.nvars();
  PositivityResult r;
  if (m == 0) {
    r.status = p.eval({}) > 0 ? Certainty::Certified : Certainty::Violated;
    return r;
  }
  unsigned g = std::max(2u, per_dim);
  // t in [0, 31/32] mapped to x = 1/(1 - t), covering [1, 32]
  size_t total = 1;
  for (unsigned k = 0; k < m; ++k) {
    total *= g;
    if (total > (1u << 20)) break;
  }
  CompiledPoly cp(p);
  std::vector<long double> x(m);
  std::vector<Rational> pt(m);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (unsigned k = 0; k < m; ++k) {
      unsigned i = static_cast<unsigned>(rem % g);
      rem /= g;
      Rational t = make_rational(31 * static_cast<long>(i), 32 * static_cast<long>(g - 1));
      pt[k] = Rational(1) / (Rational(1) - t);
      x[k] = pt[k].get_d();
    }
    if (cp(x.data()) <= 1e-9L && p.eval(pt) <= 0) {
      r.status = Certainty::Violated;
      r.witness = pt;
      return r;
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (unsigned t = 0; t < 256; ++t) {
    for (unsigned k = 0; k < m; ++k) {
      pt[k] = Rational(1) + make_rational(static_cast<long>(rng() % 100000), 1000);
      x[k] = pt[k].get_d();
    }
    if (cp(x.data()) <= 1e-9L && p.eval(pt) <= 0) {
      r.status = Certainty::Violated;
      r.witness = pt;
      return r;
    }
  }
  r.status = Certainty::SampledOnly;
  return r;
}

PositivityResult bernstein_unit(const MPoly &p, unsigned per_dim, unsigned max_depth) {
  unsigned m = p.nvars();
  PositivityResult r;
  if (m == 0) {
    Rational v = p.eval({});
    r.status = v > 0 ? Certainty::Certified : Certainty::Violated;
    if (v <= 0) r.detail = "constant face value is not positive";
    return r;
  }
  std::vector<Box> work{{std::vector<Rational>(m, Rational(0)), std::vector<Rational>(m, Rational(1)), 0}};
  std::vector<Rational> corner;
  size_t boxes = 0;
  while (!work.empty()) {
    Box box = std::move(work.back());
    work.pop_back();
    ++boxes;
    MPoly q = affine_substitute(p, box.lo, box.w);
    std::vector<unsigned> deg;
    auto coeffs = bernstein_coefficients(q, deg);
    bool all_pos = true;
    for (size_t f = 0; f < coeffs.size(); ++f) {
      if (coeffs[f] > 0) continue;
      all_pos = false;
      if (is_vertex(f, deg, corner, box)) {
        r.status = Certainty::Violated;
        r.witness = corner;
        r.detail = "non-positive value at a box vertex";
        return r;
      }
    }
    if (all_pos) continue;
    if (box.depth >= max_depth || boxes > 20000) {
      PositivityResult s = sampled_unit(p, per_dim);
      if (s.status == Certainty::Violated) return s;
      s.detail = "Bernstein subdivision did not resolve; sampled only";
      return s;
    }
    unsigned children = 1u << m;
    for (unsigned c = 0; c < children; ++c) {
      Box child{box.lo, box.w, box.depth + 1};
      for (unsigned k = 0; k < m; ++k) {
        child.w[k] = box.w[k] / 2;
        if (c & (1u << k)) child.lo[k] += child.w[k];
      }
      work.push_back(std::move(child));
    }
  }
  r.status = Certainty::Certified;
  r.detail = "all Bernstein coefficients positive after " + std::to_string(boxes) + " boxes";
  return r;
}

} // namespace

PositivityResult positivity_check(const MPoly &p, PositivityDomain domain, PositivityMode mode,
                                  unsigned samples_per_dim, unsigned max_depth) {
  if (domain == PositivityDomain::UnboundedBox) return sampled_unbounded(p, samples_per_dim);
  if (mode == PositivityMode::Sampled) return sampled_unit(p, samples_per_dim);
  return bernstein_unit(p, samples_per_dim, max_depth);
}

PositivityResult face_positivity(const MPoly &p, unsigned i, PositivityMode mode) {
  PositivityResult r = positivity_check(face(p, i), PositivityDomain::UnitCube, mode);
  if (!r.witness.empty() || r.status == Certainty::Violated) {
    // witness in ambient coordinates
    std::vector<Rational> full = r.witness;
    full.insert(full.begin() + (i - 1), Rational(1));
    r.witness = full;
  }
  return r;
}

PositivityResult ellipticity_check(const MPoly &p) {
  PositivityResult out;
  out.status = Certainty::Certified;
  for (unsigned i = 1; i <= p.nvars(); ++i) {
    PositivityResult r = face_positivity(p, i);
    if (r.status == Certainty::Violated) {
      r.detail = "face " + std::to_string(i) + ": " + r.detail;
      return r;
    }
    if (r.status == Certainty::SampledOnly) {
      out.status = Certainty::SampledOnly;
      out.detail = "face " + std::to_string(i) + " positive on samples only";
    }
  }
  return out;
}

H0SResult h0s_heuristic(const MPoly &p, unsigned max_order, unsigned box_samples,
                        unsigned max_radius) {
  H0SResult res;
  unsigned m = p.nvars();
  std::vector<MPoly> derivs;
  for (auto &a : indices_up_to(max_order, m))
    if (abs_index(a) > 0) {
      MPoly d = derivative(p, a);
      if (!d.is_zero()) derivs.push_back(d);
    }
  std::vector<CompiledPoly> cd;
  for (auto &d : derivs) cd.emplace_back(d);
  CompiledPoly cp(p);
  unsigned g = std::max(2u, box_samples);
  std::vector<double> min_p;
  std::vector<long double> x(m);
  for (unsigned R = 2; R <= max_radius; R *= 2) {
    long double sup = 0, lo = INFINITY;
    size_t total = 1;
    for (unsigned k = 0; k < m; ++k) total *= g;
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (unsigned k = 0; k < m; ++k) {
        unsigned i = static_cast<unsigned>(rem % g);
        rem /= g;
        x[k] = 1 + (R - 1) * static_cast<long double>(i) / (g - 1);
      }
      long double v = cp(x.data());
      lo = std::min(lo, v);
      if (v <= 0) {
        res.warning = true;
        if (res.witness.empty())
          for (unsigned k = 0; k < m; ++k) res.witness.push_back(make_rational(std::lround(x[k] * 1000), 1000));
        continue;
      }
      for (auto &d : cd) sup = std::max(sup, std::fabs(d(x.data()) / v));
    }
    res.sup_by_radius.push_back(static_cast<double>(sup));
    min_p.push_back(static_cast<double>(lo));
  }
  for (size_t k = 1; k < min_p.size(); ++k)
    if (min_p[k] < min_p[k - 1]) res.warning = true;
  double first = res.sup_by_radius.front(), last = res.sup_by_radius.back();
  double growth = static_cast<double>(max_radius) / 2.0;
  res.pass = last <= growth * first + 1e-300;
  res.detail = res.pass ? "ratio sup grows at most linearly with the box radius"
                        : "ratio sup grows faster than the box radius";
  if (res.warning) res.detail += "; minimum of P decreases on larger boxes or P <= 0 was sampled";
  return res;
}

} // namespace mzv

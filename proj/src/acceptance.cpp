#include "mzv/acceptance.hpp"

#include "mzv/error.hpp"
#include "mzv/identities.hpp"
#include "mzv/mahler.hpp"
#include "mzv/oracle.hpp"
#include "mzv/polyzeta.hpp"
#include "mzv/powersum.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

namespace mzv {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double absdiff(const Numeric &v, const BigFloat &target) {
  return static_cast<double>(abs(v.value - target));
}

bool c1(std::string &detail) {
  for (unsigned N = 0; N <= 40; ++N)
    if (zeta_neg_via_B1(N) != zeta_neg_closed(N)) {
      detail = "mismatch at N=" + std::to_string(N);
      return false;
    }
  detail = "41 exact equalities";
  return true;
}

bool c2(std::string &detail) {
  for (unsigned a = 0; a <= 60; ++a)
    if (!bernoulli_sum_identity(a)) {
      detail = "mismatch at alpha=" + std::to_string(a);
      return false;
    }
  detail = "61 exact equalities";
  return true;
}

bool c3(std::string &detail) {
  Rational target = make_rational(5, 12);
  Rational b3 = double_B3(0, 0), b6 = double_B6(0, 0);
  if (b3 != target || b6 != target) {
    detail = "B3=" + rational_to_string(b3) + " B6=" + rational_to_string(b6);
    return false;
  }
  PolyFamily fam;
  fam.P = {parse_poly("x1", 1), parse_poly("x1 + x2", 2)};
  PolyZetaResult r = zeta_P_at(fam, {0, 0});
  double diff = absdiff(r.value.to_numeric(), to_bigfloat(target));
  detail = "B3=B6=5/12, polynomial path off by " + fmt(diff);
  return diff <= 1e-9;
}

bool c4(std::string &detail) {
  IdentityGrid g = verify_identity_grid(8, 8);
  size_t bad = 0;
  for (auto &r : g.pairs) bad += !r.equal;
  detail = std::to_string(g.pairs.size() - bad) + "/" + std::to_string(g.pairs.size()) + " pairs equal";
  return bad == 0 && g.pairs.size() == 81;
}

bool c5(std::string &detail) {
  std::vector<std::vector<long>> ds = {{2, 3}, {2, 4, 8}, {3, 4, 5, 7}};
  for (auto &d : ds) {
    PowerSumParams p = PowerSumParams::make(d);
    Rational v = value_nonpositive(p, std::vector<long>(d.size(), 0));
    if (v != pow_rational(make_rational(-1, 2), static_cast<long>(d.size()))) {
      detail = "n=" + std::to_string(d.size()) + " gave " + rational_to_string(v);
      return false;
    }
  }
  detail = "3 configurations exact";
  return true;
}

bool c6(std::string &detail) {
  std::mt19937 rng(20240611);
  std::vector<Rational> gammas = {Rational(1), make_rational(1, 2), Rational(2), Rational(3)};
  int found = 0, tries = 0;
  while (found < 10 && tries < 10000) {
    ++tries;
    unsigned n = 2 + rng() % 3;
    std::vector<long> d(n);
    std::vector<Rational> g(n);
    for (unsigned j = 0; j < n; ++j) {
      d[j] = 2 + static_cast<long>(rng() % 5);
      g[j] = gammas[rng() % gammas.size()];
    }
    if (!regularity_ok(d)) continue;
    PowerSumParams p = PowerSumParams::make(d, g);
    std::vector<long> N1(n, 0), N2(n, 0);
    N1.back() = -1;
    N2.back() = -2;
    if (closed_last_minus1(p) != value_nonpositive(p, N1) || closed_last_minus2(p) != value_nonpositive(p, N2)) {
      std::string ds;
      for (long x : d) ds += std::to_string(x) + " ";
      detail = "mismatch for d = " + ds;
      return false;
    }
    ++found;
  }
  detail = std::to_string(found) + " random regular configurations exact";
  return found == 10;
}

bool c7(std::string &detail) {
  PowerSumParams p = PowerSumParams::make({2, 4});
  BigFloat z2 = bf_pi() * bf_pi() / 6;
  double worst = 0;
  for (long N = 0; N <= 3; ++N) {
    SpecialValue v = value_mixed_last_nonpositive(p, {1 + N, -N});
    Numeric w = Rational(-2) * v.to_numeric();
    worst = std::max(worst, absdiff(w, z2));
  }
  detail = "max deviation from pi^2/6 " + fmt(worst);
  return worst <= 1e-8;
}

bool c8(std::string &detail) {
  MPoly P = parse_poly("x1^2 + 2 x1 x2 + x2^2 + x3^2", 3);
  MPoly Q = parse_poly("x1^2 + x1 x2", 3);
  CompositionFamily u = family_from_entries(2, 3, {{1, {1, 0, 0}, 1}, {2, {2, 0, 0}, 1}});
  SpecialValue k = period_K(P, Q, 0, {1, 1}, u, {2, 0, 0}, 3);
  BigFloat target = 2 * atan(BigFloat(1) / 2);
  double diff = absdiff(k.to_numeric(), target);
  detail = "deviation from 2 arctan(1/2) " + fmt(diff);
  return diff <= 1e-8;
}

bool c9(std::string &detail) {
  MPoly P = parse_poly("x1^3 + x2^3 + x3^3 + x4^3", 4);
  MPoly Q = MPoly::constant(4, Rational(1));
  MahlerReport rep = Z_report(P, Q, 0);
  Numeric g = gamma_rational_numeric(make_rational(1, 3));
  Numeric target = make_rational(4, 135) * (g * g * g) + Numeric::exact(make_rational(1, 16));
  Numeric theta = Rational(bernoulli(4) / 27) * (g * g * g) + Numeric::exact(make_rational(1, 16));
  Numeric value = rep.value.to_numeric();
  double diff = absdiff(value, target.value);
  detail = std::to_string(rep.terms) + " terms, " + std::to_string(rep.integrals) + " face integrals, value " +
           to_decimal(value.value, 15) + ", deviation " + fmt(diff) + "; theta-expansion value 1/16 + B_4/27 Gamma(1/3)^3 = " +
           to_decimal(theta.value, 15) + " (deviation " + fmt(absdiff(value, theta.value)) + ")";
  return diff <= 1e-6;
}

bool c10(std::string &detail) {
  int checked = 0;
  for (unsigned total = 0; total <= 10; ++total)
    for (unsigned q = 0; q <= total; ++q) {
      unsigned N = total - q;
      MPoly P = parse_poly("x1", 1);
      MPoly Q = MPoly::monomial({q}, Rational(1));
      SpecialValue v = raabe_substitute(Y_expansion(P, Q, N));
      if (!v.is_exact() || v.exact() != riemann_zeta_exact_nonpositive(N + q)) {
        detail = "mismatch at N=" + std::to_string(N) + " q=" + std::to_string(q);
        return false;
      }
      ++checked;
    }
  detail = std::to_string(checked) + " exact equalities";
  return true;
}

bool c11(std::string &detail) {
  double worst1 = 0;
  for (unsigned d : {2u, 3u})
    for (long N = 0; N <= 4; ++N) {
      Numeric v = zeta1_numeric(d, Rational(1), BigFloat(-N));
      Rational exact = riemann_zeta_exact_nonpositive(static_cast<unsigned long>(d * N));
      worst1 = std::max(worst1, absdiff(v, to_bigfloat(exact)));
    }
  PowerSumParams p = PowerSumParams::make({2, 3});
  double worst2 = 0, resid = 0;
  for (std::vector<long> N : {std::vector<long>{0, 0}, std::vector<long>{0, -1}}) {
    PowerSum2Result r = powersum2_numeric(2, 3, Rational(1), Rational(1), BigFloat(N[0]), BigFloat(N[1]));
    worst2 = std::max(worst2, absdiff(r.value, to_bigfloat(value_nonpositive(p, N))));
    resid = std::max(resid, static_cast<double>(r.residual));
  }
  detail = "zeta1 max dev " + fmt(worst1) + ", two-variable max dev " + fmt(worst2) + ", residual " + fmt(resid);
  return worst1 <= 1e-8 && worst2 <= 1e-6 && resid < 1e-6;
}

bool c12(std::string &detail) {
  PowerSumParams p = PowerSumParams::make({3, 2, 2});
  DirectionalSpec spec{{0, 0, 0}, {Rational(0), Rational(0), Rational(1)}};
  DirectionalResult r = directional_limit(p, spec);
  bool parts = r.C == make_rational(1, 16) && r.H == make_rational(-1, 8) && r.cross_check;
  bool shape = false;
  if (r.value.kind() == SpecialValue::Kind::Mixed) {
    const Mixed &m = r.value.mixed();
    shape = m.base == make_rational(-1, 8) && m.terms.size() == 1 &&
            m.terms[0].constant == ConstantProduct::gammas({make_rational(1, 2), make_rational(1, 2)}) &&
            m.terms[0].coeff == make_rational(-1, 480);
  }
  BigFloat closed = -bf_pi() / 480 - BigFloat(1) / 8;
  double diff = absdiff(r.value.to_numeric(), closed);
  detail = "C=" + rational_to_string(r.C) + " H=" + rational_to_string(r.H) +
           " value=-1/480*Gamma(1/2)^2-1/8, numeric " + to_decimal(r.value.to_numeric().value, 13) +
           " vs -pi/480-1/8 dev " + fmt(diff);
  return parts && shape && diff <= 1e-10;
}

} // namespace

const std::vector<AcceptanceCriterion> &acceptance_criteria() {
  static const std::vector<AcceptanceCriterion> list = {
      {1, "zeta(-N) via B1 equals closed form, N<=40", 1, c1},
      {2, "sum C(a,k) B_k = (-1)^a B_a, a<=60", 1, c2},
      {3, "Euler double value 5/12 (B3, B6, polynomial path)", 30, c3},
      {4, "B3 = B6 on 0<=N1,N2<=8", 60, c4},
      {5, "zeta_{n,d,gamma}(0) = (-1/2)^n", 1, c5},
      {6, "closed forms at (0,..,-1) and (0,..,-2) match recursion", 5, c6},
      {7, "-2 zeta_{2,(2,4)}(1+N,-N) = zeta(2), N<=3", 5, c7},
      {8, "period integral equals 2 arctan(1/2)", 10, c8},
      {9, "Z(x1^3+..+x4^3; 0) = 4/135 Gamma(1/3)^3 + 1/16", 300, c9},
      {10, "Raabe substitution of Y(x1, x1^q; -N) = zeta(-N-q)", 1, c10},
      {11, "Euler-Maclaurin oracle agrees with exact values", 120, c11},
      {12, "directional value for d=(3,2,2) is -pi/480 - 1/8", 1, c12},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(std::ostream &out, const std::vector<int> &only) {
  std::vector<CriterionResult> results;
  for (auto &c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit_seconds;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.pass = c.check(r.detail);
    } catch (const MzvError &e) {
      r.pass = false;
      r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception &e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += "; exceeded time limit " + fmt(r.limit_seconds) + " s";
    }
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " [" << fmt(r.seconds)
        << " s] " << r.detail << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace mzv

#pragma once

#include "mzv/exactnum.hpp"
#include "mzv/multi_index.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

/// Graded-lex descending order on exponent vectors.
struct GradedLexGreater {
  bool operator()(const MultiIndex &a, const MultiIndex &b) const;
};

/// Sparse polynomial with rational coefficients; zero coefficients are never stored.
class MPoly {
public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexGreater>;

  MPoly() = default;
  explicit MPoly(unsigned nvars) : nvars_(nvars) {}

  static MPoly constant(unsigned nvars, const Rational &c);
  /// X_i, 1-based.
  static MPoly variable(unsigned nvars, unsigned i);
  static MPoly monomial(const MultiIndex &e, const Rational &c);

  unsigned nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const MultiIndex &e) const;
  void add_term(const MultiIndex &e, const Rational &c);

  MPoly operator+(const MPoly &o) const;
  MPoly operator-(const MPoly &o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly &o) const;
  MPoly &operator+=(const MPoly &o);
  MPoly &operator*=(const Rational &c);
  friend MPoly operator*(const Rational &c, const MPoly &p);
  bool operator==(const MPoly &o) const;
  bool operator!=(const MPoly &o) const { return !(*this == o); }

  MPoly pow(unsigned e) const;

  Rational eval(const std::vector<Rational> &x) const;
  long double eval_ld(const long double *x) const;

private:
  unsigned nvars_ = 0;
  TermMap terms_;
};

MPoly derivative(const MPoly &p, const MultiIndex &g);
/// P(X + a).
MPoly shift(const MPoly &p, const std::vector<Rational> &a);
/// P(lo_1 + w_1 X_1, ..., lo_n + w_n X_n).
MPoly affine_substitute(const MPoly &p, const std::vector<Rational> &lo,
                        const std::vector<Rational> &w);
/// Substitute 1 for X_i (1-based); result has nvars - 1 variables.
MPoly face(const MPoly &p, unsigned i);
/// Insert a new variable at position i (1-based) not occurring in p.
MPoly embed(const MPoly &p, unsigned i);

/// Degree when homogeneous (zero polynomial counts as degree 0).
std::optional<unsigned> homogeneous_degree(const MPoly &p);
bool is_homogeneous(const MPoly &p);
std::vector<std::pair<unsigned, MPoly>> homogeneous_components(const MPoly &q);

/// [H_1, ..., H_d], H_k = sum_{|g|=k} b^g/g! d^g P on face i.
std::vector<MPoly> taylor_H(const MPoly &p, unsigned i, const std::vector<Rational> &b);

/// (alpha!/prod u_k!) prod_k prod_{g in Delta_k} (d^g P(face i)/g!)^{u_{k,g}}.
MPoly build_P_alpha_u(const MPoly &p, unsigned i, const MultiIndex &alpha,
                      const CompositionFamily &u);
/// Same product without the alpha!/prod u_k! factor; also returns prod u_k!.
MPoly derivative_product(const MPoly &p, unsigned i, const CompositionFamily &u,
                         Integer &u_factorials);

/// "3/2 x1^2 x3 + x2 - 1/6"
std::string to_text(const MPoly &p);
MPoly parse_poly(const std::string &text, unsigned nvars = 0);

/// Flattened monomial list for fast long double evaluation.
class CompiledPoly {
public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MPoly &p);
  long double operator()(const long double *x) const;
  unsigned nvars() const { return nvars_; }

private:
  unsigned nvars_ = 0;
  std::vector<long double> coeffs_;
  std::vector<unsigned> exps_;
  std::vector<unsigned> maxdeg_;
};

} // namespace mzv

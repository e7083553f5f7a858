#include "mzv/mpoly.hpp"

#include "mzv/error.hpp"
#include "mzv/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mzv {

bool GradedLexGreater::operator()(const MultiIndex &a, const MultiIndex &b) const {
  unsigned da = abs_index(a), db = abs_index(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly MPoly::constant(unsigned nvars, const Rational &c) {
  MPoly p(nvars);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(unsigned nvars, unsigned i) {
  if (i < 1 || i > nvars) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
  MultiIndex e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const MultiIndex &e, const Rational &c) {
  MPoly p(static_cast<unsigned>(e.size()));
  p.add_term(e, c);
  return p;
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(abs_index(terms_.begin()->first));
}

Rational MPoly::coeff(const MultiIndex &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const MultiIndex &e, const Rational &c) {
  if (e.size() != nvars_) fail(ErrorCode::DimensionMismatch, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void check_same(const MPoly &a, const MPoly &b) {
  if (a.nvars() != b.nvars()) fail(ErrorCode::DimensionMismatch, "polynomials live in different rings");
}

MPoly MPoly::operator+(const MPoly &o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly &MPoly::operator+=(const MPoly &o) {
  check_same(*this, o);
  for (auto &[e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto &t : r.terms_) t.second = -t.second;
  return r;
}

MPoly MPoly::operator-(const MPoly &o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly &o) const {
  check_same(*this, o);
  MPoly r(nvars_);
  MultiIndex e(nvars_);
  for (auto &[ea, ca] : terms_)
    for (auto &[eb, cb] : o.terms_) {
      for (unsigned k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly &MPoly::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_) t.second *= c;
  return *this;
}

MPoly operator*(const Rational &c, const MPoly &p) {
  MPoly r = p;
  r *= c;
  return r;
}

bool MPoly::operator==(const MPoly &o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, Rational(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational MPoly::eval(const std::vector<Rational> &x) const {
  if (x.size() != nvars_) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  Rational s(0);
  for (auto &[e, c] : terms_) {
    Rational t = c;
    for (unsigned k = 0; k < nvars_; ++k)
      if (e[k]) t *= pow_rational(x[k], e[k]);
    s += t;
  }
  return s;
}

long double MPoly::eval_ld(const long double *x) const {
  long double s = 0;
  for (auto &[e, c] : terms_) {
    long double t = c.get_d();
    for (unsigned k = 0; k < nvars_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) t *= x[k];
    s += t;
  }
  return s;
}

MPoly derivative(const MPoly &p, const MultiIndex &g) {
  if (g.size() != p.nvars()) fail(ErrorCode::DimensionMismatch, "derivative order has wrong length");
  MPoly r(p.nvars());
  for (auto &[e, c] : p.terms()) {
    if (!index_leq(g, e)) continue;
    Rational t = c;
    MultiIndex f = e;
    for (unsigned k = 0; k < g.size(); ++k) {
      for (unsigned j = 0; j < g[k]; ++j) t *= e[k] - j;
      f[k] -= g[k];
    }
    r.add_term(f, t);
  }
  return r;
}

MPoly affine_substitute(const MPoly &p, const std::vector<Rational> &lo,
                        const std::vector<Rational> &w) {
  unsigned n = p.nvars();
  if (lo.size() != n || w.size() != n) fail(ErrorCode::DimensionMismatch, "substitution has wrong length");
  // per-variable power tables of (lo_k + w_k X_k)
  std::vector<std::vector<MPoly>> powers(n);
  std::vector<unsigned> maxdeg(n, 0);
  for (auto &[e, c] : p.terms())
    for (unsigned k = 0; k < n; ++k) maxdeg[k] = std::max(maxdeg[k], e[k]);
  for (unsigned k = 0; k < n; ++k) {
    MPoly lin = MPoly::constant(n, lo[k]) + w[k] * MPoly::variable(n, k + 1);
    powers[k].push_back(MPoly::constant(n, Rational(1)));
    for (unsigned j = 1; j <= maxdeg[k]; ++j) powers[k].push_back(powers[k].back() * lin);
  }
  MPoly r(n);
  for (auto &[e, c] : p.terms()) {
    MPoly t = MPoly::constant(n, c);
    for (unsigned k = 0; k < n; ++k)
      if (e[k]) t = t * powers[k][e[k]];
    r += t;
  }
  return r;
}

MPoly shift(const MPoly &p, const std::vector<Rational> &a) {
  return affine_substitute(p, a, std::vector<Rational>(p.nvars(), Rational(1)));
}

MPoly face(const MPoly &p, unsigned i) {
  if (i < 1 || i > p.nvars()) fail(ErrorCode::IndexOutOfRange, "face index out of range");
  MPoly r(p.nvars() - 1);
  for (auto &[e, c] : p.terms()) {
    MultiIndex f = e;
    f.erase(f.begin() + (i - 1));
    r.add_term(f, c);
  }
  return r;
}

MPoly embed(const MPoly &p, unsigned i) {
  if (i < 1 || i > p.nvars() + 1) fail(ErrorCode::IndexOutOfRange, "embedding index out of range");
  MPoly r(p.nvars() + 1);
  for (auto &[e, c] : p.terms()) {
    MultiIndex f = e;
    f.insert(f.begin() + (i - 1), 0u);
    r.add_term(f, c);
  }
  return r;
}

std::optional<unsigned> homogeneous_degree(const MPoly &p) {
  if (p.is_zero()) return 0u;
  unsigned d = abs_index(p.terms().begin()->first);
  for (auto &[e, c] : p.terms())
    if (abs_index(e) != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const MPoly &p) { return homogeneous_degree(p).has_value(); }

std::vector<std::pair<unsigned, MPoly>> homogeneous_components(const MPoly &q) {
  std::map<unsigned, MPoly> parts;
  for (auto &[e, c] : q.terms()) {
    unsigned d = abs_index(e);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, MPoly(q.nvars())).first;
    it->second.add_term(e, c);
  }
  std::vector<std::pair<unsigned, MPoly>> out;
  for (auto &kv : parts) out.emplace_back(kv.first, kv.second);
  return out;
}

std::vector<MPoly> taylor_H(const MPoly &p, unsigned i, const std::vector<Rational> &b) {
  auto d = homogeneous_degree(p);
  if (!d) fail(ErrorCode::NotHomogeneous, "taylor_H needs a homogeneous polynomial");
  if (b.size() != p.nvars()) fail(ErrorCode::DimensionMismatch, "shift vector has wrong length");
  std::vector<MPoly> out;
  for (unsigned k = 1; k <= *d; ++k) {
    MPoly h(p.nvars() - 1);
    for (auto &g : delta_set(k, p.nvars())) {
      Rational w(1);
      for (unsigned j = 0; j < g.size(); ++j) w *= pow_rational(b[j], g[j]);
      if (w == 0) continue;
      w /= Rational(factorial_index(g));
      h += w * face(derivative(p, g), i);
    }
    out.push_back(h);
  }
  return out;
}

MPoly derivative_product(const MPoly &p, unsigned i, const CompositionFamily &u,
                         Integer &u_factorials) {
  unsigned n = p.nvars();
  MPoly r = MPoly::constant(n - 1, Rational(1));
  u_factorials = 1;
  for (unsigned k = 1; k <= u.u.size(); ++k) {
    const auto &delta = delta_set(k, n);
    if (u.u[k - 1].size() != delta.size())
      fail(ErrorCode::CompositionMismatch, "composition block has wrong length");
    for (size_t t = 0; t < delta.size(); ++t) {
      unsigned c = u.u[k - 1][t];
      if (c == 0) continue;
      u_factorials *= factorial(c);
      MPoly f = face(derivative(p, delta[t]), i);
      if (f.is_zero()) return MPoly(n - 1);
      f *= Rational(1, 1) / Rational(factorial_index(delta[t]));
      r = r * f.pow(c);
    }
  }
  return r;
}

MPoly build_P_alpha_u(const MPoly &p, unsigned i, const MultiIndex &alpha,
                      const CompositionFamily &u) {
  if (i < 1 || i > p.nvars()) fail(ErrorCode::IndexOutOfRange, "face index out of range");
  if (u.u.size() != alpha.size())
    fail(ErrorCode::CompositionMismatch, "composition family has wrong number of blocks");
  for (size_t k = 0; k < alpha.size(); ++k)
    if (abs_index(u.u[k]) != alpha[k])
      fail(ErrorCode::CompositionMismatch, "|u_k| differs from alpha_k");
  Integer uf;
  MPoly r = derivative_product(p, i, u, uf);
  r *= Rational(factorial_index(alpha)) / Rational(uf);
  return r;
}

static std::string coeff_text(const Rational &c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_str();
}

std::string to_text(const MPoly &p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto &[e, c] : p.terms()) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string vars;
    for (unsigned k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!vars.empty()) vars += ' ';
      vars += "x" + std::to_string(k + 1);
      if (e[k] > 1) vars += "^" + std::to_string(e[k]);
    }
    if (vars.empty())
      out += coeff_text(a);
    else if (a == 1)
      out += vars;
    else
      out += coeff_text(a) + " " + vars;
    first = false;
  }
  return out;
}

namespace {

struct Lexer {
  const std::string &s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  /// Optional '*' between factors; it must be followed by a variable.
  void star() {
    if (peek() != '*') return;
    ++pos;
    char c = peek();
    if (c != 'x' && c != 'X') fail(ErrorCode::ParseError, "expected a variable after '*' at position " + std::to_string(pos));
  }
  std::string digits() {
    size_t a = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(a, pos - a);
  }
};

[[noreturn]] void parse_error(const std::string &msg) { fail(ErrorCode::ParseError, msg); }

} // namespace

MPoly parse_poly(const std::string &text, unsigned nvars) {
  struct RawTerm {
    Rational c;
    std::map<unsigned, unsigned> exps;
  };
  std::vector<RawTerm> raw;
  Lexer lx{text};
  unsigned maxvar = 0;
  bool expect_sign = false;
  if (lx.done()) parse_error("empty polynomial");
  while (!lx.done()) {
    Rational sign(1);
    char ch = lx.peek();
    if (ch == '+' || ch == '-') {
      if (ch == '-') sign = -1;
      ++lx.pos;
    } else if (expect_sign) {
      parse_error("expected '+' or '-' at position " + std::to_string(lx.pos));
    }
    RawTerm t{sign, {}};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.digits();
      std::string den = "1";
      if (lx.pos < text.size() && text[lx.pos] == '/') {
        ++lx.pos;
        den = lx.digits();
        if (den.empty()) parse_error("missing denominator");
      }
      t.c *= make_rational(Integer(num), Integer(den));
      any = true;
      lx.star();
    }
    while (lx.peek() == 'x' || lx.peek() == 'X') {
      ++lx.pos;
      std::string idx = lx.digits();
      if (idx.empty()) parse_error("variable without index");
      unsigned v = static_cast<unsigned>(std::stoul(idx));
      if (v == 0) parse_error("variables are numbered from x1");
      unsigned e = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        lx.skip();
        std::string ed = lx.digits();
        if (ed.empty()) parse_error("missing exponent");
        e = static_cast<unsigned>(std::stoul(ed));
      }
      t.exps[v] += e;
      maxvar = std::max(maxvar, v);
      any = true;
      lx.star();
    }
    if (!any) parse_error("malformed term at position " + std::to_string(lx.pos));
    raw.push_back(t);
    expect_sign = true;
  }
  if (nvars == 0) nvars = std::max(maxvar, 1u);
  if (maxvar > nvars) fail(ErrorCode::DimensionMismatch, "polynomial uses more variables than declared");
  MPoly p(nvars);
  for (auto &t : raw) {
    MultiIndex e(nvars, 0);
    for (auto &[v, k] : t.exps) e[v - 1] = k;
    p.add_term(e, t.c);
  }
  return p;
}

CompiledPoly::CompiledPoly(const MPoly &p) : nvars_(p.nvars()), maxdeg_(p.nvars(), 0) {
  if (nvars_ > 8) fail(ErrorCode::DimensionMismatch, "compiled evaluation supports at most 8 variables");
  for (auto &[e, c] : p.terms()) {
    coeffs_.push_back(to_bigfloat(c).convert_to<long double>());
    for (unsigned k = 0; k < nvars_; ++k) {
      exps_.push_back(e[k]);
      maxdeg_[k] = std::max(maxdeg_[k], e[k]);
    }
  }
}

long double CompiledPoly::operator()(const long double *x) const {
  long double pw[8][32];
  unsigned n = nvars_;
  for (unsigned k = 0; k < n; ++k) {
    pw[k][0] = 1;
    for (unsigned j = 1; j <= maxdeg_[k] && j < 32; ++j) pw[k][j] = pw[k][j - 1] * x[k];
  }
  long double s = 0;
  const unsigned *e = exps_.data();
  for (size_t t = 0; t < coeffs_.size(); ++t, e += n) {
    long double v = coeffs_[t];
    for (unsigned k = 0; k < n; ++k) {
      unsigned ek = e[k];
      if (ek < 32)
        v *= pw[k][ek];
      else
        v *= std::pow(x[k], static_cast<long double>(ek));
    }
    s += v;
  }
  return s;
}

} // namespace mzv

#include "mzv/exactnum.hpp"

#include "mzv/error.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>

namespace mzv {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::DegenerateFactor: return "DegenerateFactor";
  case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::NotHomogeneous: return "NotHomogeneous";
  case ErrorCode::CompositionMismatch: return "CompositionMismatch";
  case ErrorCode::NotElliptic: return "NotElliptic";
  case ErrorCode::PositivityUnverified: return "PositivityUnverified";
  case ErrorCode::QuadratureDidNotConverge: return "QuadratureDidNotConverge";
  case ErrorCode::RegularityViolated: return "RegularityViolated";
  case ErrorCode::PositiveEntry: return "PositiveEntry";
  case ErrorCode::Pole: return "Pole";
  case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  case ErrorCode::IraViolated: return "IraViolated";
  case ErrorCode::ThetaDegenerate: return "ThetaDegenerate";
  case ErrorCode::NotDiagonal: return "NotDiagonal";
  case ErrorCode::DomainViolation: return "DomainViolation";
  case ErrorCode::ContinuationDepthInsufficient: return "ContinuationDepthInsufficient";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DomainViolation, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0) fail(ErrorCode::DomainViolation, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

static bool parse_integer(const std::string &s, Integer &out) {
  size_t i = 0;
  std::string digits;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') digits.push_back('-');
    ++i;
  }
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    digits.push_back(s[i]);
  }
  return out.set_str(digits, 10) == 0;
}

static std::string strip(const std::string &s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Rational parse_rational(const std::string &text) {
  std::string t = strip(text);
  auto slash = t.find('/');
  Integer num, den(1);
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_integer(t, num);
  } else {
    ok = parse_integer(strip(t.substr(0, slash)), num) &&
         parse_integer(strip(t.substr(slash + 1)), den);
  }
  if (!ok || den == 0) fail(ErrorCode::ParseError, "bad rational: '" + text + "'");
  return make_rational(num, den);
}

std::string rational_to_string(const Rational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

Integer floor_rational(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_part(const Rational &q) { return q - Rational(floor_rational(q)); }

Rational pow_rational(const Rational &base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorCode::DomainViolation, "0 to a negative power");
    return pow_rational(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(n, d);
}

std::optional<Rational> exact_root(const Rational &q, unsigned d) {
  if (d == 0 || q <= 0) return std::nullopt;
  Integer n, m;
  if (mpz_root(n.get_mpz_t(), q.get_num_mpz_t(), d) == 0) return std::nullopt;
  if (mpz_root(m.get_mpz_t(), q.get_den_mpz_t(), d) == 0) return std::nullopt;
  return make_rational(n, m);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binom_signed(long n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), k);
  return r;
}

Rational binom_rational(const Rational &x, unsigned long k) {
  Rational r(1);
  for (unsigned long i = 0; i < k; ++i) r *= (x - Rational(static_cast<long>(i)));
  r /= Rational(factorial(k));
  return r;
}

Rational falling_factorial(long n, long m) {
  if (m == -1) {
    if (n == -1) fail(ErrorCode::DegenerateFactor, "(N)_{-1} with N = -1");
    return make_rational(1, n + 1);
  }
  if (m < -1) fail(ErrorCode::DomainViolation, "falling factorial index below -1");
  Rational r(1);
  for (long t = 0; t < m; ++t) r *= Rational(n - t);
  return r;
}

namespace {

constexpr unsigned kEagerBernoulli = 128;

struct BernoulliTable {
  std::vector<Rational> values;
  std::shared_mutex mutex;
  std::once_flag init;

  void extend_to(unsigned k) {
    for (unsigned m = static_cast<unsigned>(values.size()); m <= k; ++m) {
      if (m == 0) {
        values.emplace_back(1);
        continue;
      }
      if (m > 1 && m % 2 == 1) {
        values.emplace_back(0);
        continue;
      }
      Rational s(0);
      Integer c(1);
      for (unsigned j = 0; j < m; ++j) {
        if (sgn(values[j]) != 0) s += Rational(c) * values[j];
        c = c * (m + 1 - j) / (j + 1);
      }
      values.push_back(-s / Rational(static_cast<long>(m + 1)));
    }
  }
};

BernoulliTable &table() {
  static BernoulliTable t;
  std::call_once(t.init, [] { t.extend_to(kEagerBernoulli); });
  return t;
}

} // namespace

Rational bernoulli(unsigned k) {
  auto &t = table();
  {
    std::shared_lock lock(t.mutex);
    if (k < t.values.size()) return t.values[k];
  }
  std::unique_lock lock(t.mutex);
  t.extend_to(k);
  return t.values[k];
}

Rational bernoulli_tilde(unsigned k) {
  return (k % 2 == 1) ? Rational(-bernoulli(k)) : bernoulli(k);
}

std::vector<Rational> bernoulli_poly(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j)
    c[j] = Rational(binom_signed(k, j)) * bernoulli(k - j);
  return c;
}

Rational eval_bernoulli_poly(unsigned k, const Rational &x) {
  auto c = bernoulli_poly(k);
  Rational r(0);
  for (unsigned j = k + 1; j-- > 0;) r = r * x + c[j];
  return r;
}

Rational pochhammer_shift(const Rational &x, unsigned long M, unsigned long b) {
  Rational r(1);
  for (long k = -static_cast<long>(M); k < static_cast<long>(b); ++k) {
    Rational f = Rational(k) - x;
    if (f == 0)
      fail(ErrorCode::DegenerateFactor,
           "pochhammer factor vanishes at k = " + std::to_string(k));
    r *= f;
  }
  return r;
}

Rational riemann_zeta_exact_nonpositive(unsigned long M) {
  Rational b = bernoulli(static_cast<unsigned>(M + 1)) / Rational(static_cast<long>(M + 1));
  return (M % 2 == 0) ? b : Rational(-b);
}

} // namespace mzv

#include "mzv/powersum.hpp"

#include "mzv/error.hpp"

#include <map>

namespace mzv {

PowerSumParams PowerSumParams::make(std::vector<long> d, std::vector<Rational> gamma) {
  if (d.empty()) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  if (gamma.empty()) gamma.assign(d.size(), Rational(1));
  if (gamma.size() != d.size())
    fail(ErrorCode::DimensionMismatch, "d and gamma must have the same length");
  for (long v : d)
    if (v < 1) fail(ErrorCode::InvalidArgument, "all d_j must be positive integers");
  for (auto &g : gamma)
    if (g <= 0) fail(ErrorCode::DomainViolation, "all gamma_j must be positive in exact mode");
  PowerSumParams p;
  p.n = static_cast<unsigned>(d.size());
  p.d = std::move(d);
  p.gamma = std::move(gamma);
  return p;
}

PowerSumParams PowerSumParams::prefix(unsigned m) const {
  PowerSumParams p;
  p.n = m;
  p.d.assign(d.begin(), d.begin() + m);
  p.gamma.assign(gamma.begin(), gamma.begin() + m);
  return p;
}

namespace {

/// Calls f(j, sum) for every j and every subset of {j+1..n}; stops when f returns false.
template <class F> void for_each_partial_sum(const std::vector<long> &d, F f) {
  size_t n = d.size();
  for (size_t j = 0; j < n; ++j) {
    size_t rest = n - j - 1;
    if (rest > 20) fail(ErrorCode::InvalidArgument, "too many variables for the regularity scan");
    for (unsigned long mask = 0; mask < (1ul << rest); ++mask) {
      Rational s = make_rational(1, d[j]);
      for (size_t k = 0; k < rest; ++k)
        if (mask & (1ul << k)) s += make_rational(1, d[j + 1 + k]);
      if (!f(j, mask, rest, s)) return;
    }
  }
}

bool natural(const Rational &q) { return is_integer(q) && q > 0; }

void require_regular(const std::vector<long> &d) {
  if (!regularity_ok(d)) fail(ErrorCode::RegularityViolated, "regularity assumption violated");
}

void require_ira(const std::vector<long> &d, long &b) {
  IraResult r = ira_ok(d);
  if (!r.ok) fail(ErrorCode::IraViolated, "integrality assumption for the directional limit violated");
  b = r.b;
}

void require_len(const std::vector<long> &N, unsigned n) {
  if (N.size() != n) fail(ErrorCode::DimensionMismatch, "N must have length n");
}

void require_nonneg(const std::vector<long> &N) {
  for (long v : N)
    if (v < 0) fail(ErrorCode::InvalidArgument, "N entries must be non-negative here");
}

Rational pow_gamma(const Rational &g, long e) { return pow_rational(g, e); }

class Recursion {
public:
  Recursion(const PowerSumParams &p, int digits, bool exact_only)
      : p_(p), digits_(digits), exact_only_(exact_only) {}

  SpecialValue eval(const std::vector<long> &N) {
    auto it = memo_.find(N);
    if (it != memo_.end()) return it->second;
    SpecialValue v = compute(N);
    memo_.emplace(N, v);
    return v;
  }

private:
  SpecialValue compute(const std::vector<long> &N) {
    size_t n = N.size();
    if (n == 1) {
      long arg = p_.d[0] * N[0];
      if (N[0] <= 0)
        return Rational(pow_gamma(p_.gamma[0], -N[0]) *
                        riemann_zeta_exact_nonpositive(static_cast<unsigned long>(-arg)));
      if (exact_only_) fail(ErrorCode::PositiveEntry, "positive argument in the exact recursion");
      if (arg == 1) fail(ErrorCode::Pole, "base case hits the pole of zeta at 1");
      Numeric z = riemann_zeta_numeric(BigFloat(arg), digits_);
      return SpecialValue(pow_gamma(p_.gamma[0], -N[0]) * z);
    }
    long Nn = N[n - 1];
    if (Nn > 0) {
      if (exact_only_) fail(ErrorCode::PositiveEntry, "positive argument in the exact recursion");
      fail(ErrorCode::HypothesisViolated,
           "recursion produced a positive last argument at depth " + std::to_string(n));
    }
    long dn = p_.d[n - 1];
    std::vector<long> head(N.begin(), N.end() - 1);
    head.back() += Nn;
    SpecialValue out = make_rational(-1, 2) * eval(head);
    long kmax = (1 - dn * Nn) / 2;
    for (long k = 1; k <= kmax; ++k) {
      long odd = 2 * k - 1;
      if (odd % dn != 0) continue;
      long m = odd / dn;
      Rational coef = bernoulli(static_cast<unsigned>(2 * k)) / (2 * k);
      if (coef == 0) continue;
      coef *= Rational(binom_signed(-Nn, static_cast<unsigned long>(m)));
      if (coef == 0) continue;
      coef *= pow_gamma(p_.gamma[n - 1], m);
      std::vector<long> shifted = head;
      shifted.back() += m;
      out += Rational(-coef) * eval(shifted);
    }
    return out;
  }

  const PowerSumParams &p_;
  int digits_;
  bool exact_only_;
  std::map<std::vector<long>, SpecialValue> memo_;
};

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace

bool regularity_ok(const std::vector<long> &d) {
  bool ok = true;
  for_each_partial_sum(d, [&](size_t, unsigned long, size_t, const Rational &s) {
    if (natural(s)) ok = false;
    return ok;
  });
  return ok;
}

IraResult ira_ok(const std::vector<long> &d) {
  IraResult r;
  if (d.size() < 3) return r;
  bool ok = true, hit = false;
  for_each_partial_sum(d, [&](size_t j, unsigned long mask, size_t rest, const Rational &s) {
    if (!natural(s)) return true;
    bool allowed = j == 1 && mask == (1ul << rest) - 1;
    if (!allowed) ok = false;
    else hit = true;
    return ok;
  });
  if (!ok || !hit) return r;
  Rational b(0);
  for (size_t k = 1; k < d.size(); ++k) b += make_rational(1, d[k]);
  r.ok = true;
  r.b = b.get_num().get_si();
  return r;
}

Rational value_nonpositive(const PowerSumParams &params, const std::vector<long> &N) {
  require_len(N, params.n);
  require_regular(params.d);
  for (long v : N)
    if (v > 0) fail(ErrorCode::PositiveEntry, "all entries of N must be non-positive");
  Recursion rec(params, kDefaultDigits, true);
  return rec.eval(N).exact();
}

SpecialValue value_mixed_last_nonpositive(const PowerSumParams &params, const std::vector<long> &N,
                                          int digits) {
  require_len(N, params.n);
  require_regular(params.d);
  check_digits(digits);
  if (N.back() > 0) fail(ErrorCode::PositiveEntry, "the last entry of N must be non-positive");
  Recursion rec(params, digits, false);
  return rec.eval(N);
}

Rational closed_zero(const PowerSumParams &params) {
  require_regular(params.d);
  return pow_rational(make_rational(-1, 2), params.n);
}

namespace {

Rational c_one(const PowerSumParams &p) {
  long d1 = p.d[0];
  return sign(d1) * bernoulli(static_cast<unsigned>(d1 + 1)) / (d1 + 1) * p.gamma[0];
}

Rational b_of(long dj) { return bernoulli(static_cast<unsigned>(dj + 1)) / (dj + 1); }

} // namespace

Rational closed_last_minus1(const PowerSumParams &params) {
  require_regular(params.d);
  Rational s = c_one(params);
  for (unsigned j = 1; j < params.n; ++j) s -= b_of(params.d[j]) * params.gamma[j];
  return pow_rational(make_rational(-1, 2), params.n - 1) * s;
}

Rational closed_last_minus2(const PowerSumParams &params) {
  require_regular(params.d);
  unsigned n = params.n;
  long d1 = params.d[0];
  Rational half = make_rational(-1, 2);
  Rational first = pow_rational(half, n - 1) * bernoulli(static_cast<unsigned>(2 * d1 + 1)) /
                   (2 * d1 + 1) * params.gamma[0] * params.gamma[0];
  if (n == 1) return first;
  Rational c1 = c_one(params), acc(0), partial(0);
  for (unsigned k = 1; k < n; ++k) {
    acc += b_of(params.d[k]) * params.gamma[k] * (c1 - partial);
    partial += b_of(params.d[k]) * params.gamma[k];
  }
  return first - 2 * pow_rational(half, static_cast<long>(n) - 2) * acc;
}

Rational closed_even_tail(const PowerSumParams &params, const std::vector<long> &N) {
  require_len(N, params.n);
  require_regular(params.d);
  require_nonneg(N);
  for (unsigned j = 1; j < params.n; ++j)
    if (params.d[j] % 2 != 0) fail(ErrorCode::HypothesisViolated, "d_2..d_n must all be even");
  long total = 0;
  for (long v : N) total += v;
  long idx = params.d[0] * total;
  return pow_rational(make_rational(-1, 2), params.n - 1) * pow_rational(params.gamma[0], total) *
         sign(idx) * bernoulli(static_cast<unsigned>(idx + 1)) / (idx + 1);
}

Rational A_value(const std::vector<long> &d, const std::vector<long> &N) {
  long b;
  require_ira(d, b);
  require_len(N, static_cast<unsigned>(d.size()));
  require_nonneg(N);
  size_t n = d.size();
  std::vector<long> S(n + 1, 0);
  for (size_t j = n; j-- > 0;) S[j] = S[j + 1] + N[j];
  Rational out(1);
  // 0-based: factor j runs over 2..n-1, u from -S[j-1] to -S[j]-1
  for (size_t j = 2; j < n; ++j) {
    Rational tail(0);
    for (size_t k = j; k < n; ++k) tail += make_rational(1, d[k]);
    for (long u = -S[j - 1]; u <= -S[j] - 1; ++u) out *= Rational(u) - tail;
  }
  return out;
}

Rational B_theta(const std::vector<long> &N, const std::vector<Rational> &theta, long b) {
  size_t n = N.size();
  if (theta.size() != n) fail(ErrorCode::DimensionMismatch, "theta must have length n");
  if (n < 2) fail(ErrorCode::InvalidArgument, "the directional factor needs n >= 2");
  require_nonneg(N);
  Rational tsum(0);
  for (size_t j = 1; j < n; ++j) tsum += theta[j];
  if (tsum == 0 || theta[n - 1] == 0)
    fail(ErrorCode::ThetaDegenerate, "theta_2+...+theta_n and theta_n must be nonzero");
  long mid = b, all = b;
  for (size_t j = 1; j + 1 < n; ++j) mid += N[j];
  for (size_t j = 1; j < n; ++j) all += N[j];
  return sign(mid) * Rational(factorial(static_cast<unsigned long>(N[n - 1]))) /
         Rational(factorial(static_cast<unsigned long>(all))) * theta[n - 1] / tsum;
}

namespace {

struct CParts {
  long b, M, idx;
  Rational prod_d;
};

CParts c_parts(const std::vector<long> &d, const std::vector<long> &N) {
  CParts c;
  require_ira(d, c.b);
  require_len(N, static_cast<unsigned>(d.size()));
  require_nonneg(N);
  long total = 0;
  for (long v : N) total += v;
  c.M = total + c.b;
  c.idx = d[0] * c.M;
  c.prod_d = 1;
  for (size_t j = 1; j < d.size(); ++j) c.prod_d *= d[j];
  return c;
}

} // namespace

Rational C_value(const std::vector<long> &d, const std::vector<long> &N) {
  CParts c = c_parts(d, N);
  size_t n = d.size();
  long mid = c.b + c.idx, all = c.b;
  for (size_t j = 1; j + 1 < n; ++j) mid += N[j];
  for (size_t j = 1; j < n; ++j) all += N[j];
  return A_value(d, N) * sign(mid) * Rational(factorial(static_cast<unsigned long>(N[n - 1]))) /
         (Rational(factorial(static_cast<unsigned long>(all))) * c.prod_d * (c.idx + 1));
}

Rational C_from_parts(const std::vector<long> &d, const std::vector<long> &N) {
  CParts c = c_parts(d, N);
  std::vector<Rational> unit(d.size(), Rational(0));
  unit.back() = 1;
  return A_value(d, N) * B_theta(N, unit, c.b) * sign(c.idx) / (c.prod_d * (c.idx + 1));
}

Rational H_value(const PowerSumParams &params, const std::vector<long> &N) {
  long b;
  require_ira(params.d, b);
  require_len(N, params.n);
  require_nonneg(N);
  unsigned n = params.n;
  PowerSumParams inner = params.prefix(n - 1);
  std::vector<long> head(N.begin(), N.end() - 1);
  for (auto &v : head) v = -v;
  long Nn = N[n - 1], dn = params.d[n - 1];
  head.back() -= Nn;
  Rational out = make_rational(-1, 2) * value_nonpositive(inner, head);
  long kmax = (1 + dn * Nn) / 2;
  for (long k = 1; k <= kmax; ++k) {
    long odd = 2 * k - 1;
    if (odd % dn != 0) continue;
    long m = odd / dn;
    if (m > Nn) continue;
    Rational coef = bernoulli(static_cast<unsigned>(2 * k)) / (2 * k) *
                    Rational(binom_signed(Nn, static_cast<unsigned long>(m))) *
                    pow_rational(params.gamma[n - 1], m);
    if (coef == 0) continue;
    std::vector<long> shifted = head;
    shifted.back() += m;
    out -= coef * value_nonpositive(inner, shifted);
  }
  return out;
}

DirectionalResult directional_limit(const PowerSumParams &params, const DirectionalSpec &spec,
                                    int digits) {
  check_digits(digits);
  long b;
  require_ira(params.d, b);
  require_len(spec.N, params.n);
  require_nonneg(spec.N);
  unsigned n = params.n;
  DirectionalResult res;
  // the theta ratio is B_theta divided by its value at theta = e_n
  std::vector<Rational> unit(n, Rational(0));
  unit.back() = 1;
  Rational bt = B_theta(spec.N, spec.theta, b);
  res.theta_ratio = bt / B_theta(spec.N, unit, b);
  res.C = C_value(params.d, spec.N);
  Rational check = C_from_parts(params.d, spec.N);
  if (check != res.C)
    fail(ErrorCode::HypothesisViolated, "closed-form C disagrees with its A/B assembly: " +
                                            rational_to_string(res.C) + " vs " + rational_to_string(check));
  res.cross_check = true;
  res.H = H_value(params, spec.N);

  long total = 0;
  for (long v : spec.N) total += v;
  long M = total + b;
  Rational coeff = res.C * bernoulli(static_cast<unsigned>(params.d[0] * M + 1)) *
                   pow_rational(params.gamma[0], M) * res.theta_ratio;
  if (coeff == 0) {
    res.value = SpecialValue(res.H);
    return res;
  }
  std::vector<Rational> gam;
  bool exact = true;
  Numeric inexact = Numeric::exact(Rational(1));
  for (unsigned j = 1; j < n; ++j) {
    gam.push_back(make_rational(1, params.d[j]));
    auto root = exact_root(params.gamma[j], static_cast<unsigned>(params.d[j]));
    if (root) {
      coeff /= *root;
    } else {
      exact = false;
      BigFloat g = to_bigfloat(params.gamma[j]);
      BigFloat v = boost::multiprecision::pow(g, BigFloat(-1) / BigFloat(params.d[j]));
      inexact = inexact * Numeric::of(v, 4 * ulp_of(v));
    }
  }
  ConstantProduct cp = ConstantProduct::gammas(gam);
  if (exact) {
    res.value = SpecialValue::term(coeff, cp) + SpecialValue(res.H);
  } else {
    Numeric v = coeff * (inexact * cp.evaluate(digits)) + Numeric::exact(res.H);
    res.value = SpecialValue(v);
  }
  return res;
}

} // namespace mzv

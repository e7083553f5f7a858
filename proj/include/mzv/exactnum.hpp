#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace mzv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced p/q. Throws DomainViolation on q == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer &num, const Integer &den);

/// Accepts "p", "p/q", "-p/q" with optional whitespace.
Rational parse_rational(const std::string &text);

/// Always "p/q", including "n/1".
std::string rational_to_string(const Rational &q);

bool is_integer(const Rational &q);
Integer floor_rational(const Rational &q);
Rational frac_part(const Rational &q);

Rational pow_rational(const Rational &base, long exponent);
/// Rational r with r^d == q when one exists (q > 0).
std::optional<Rational> exact_root(const Rational &q, unsigned d);

Integer factorial(unsigned long n);

/// Generalized binomial n(n-1)...(n-k+1)/k!.
Integer binom_signed(long n, unsigned long k);
Rational binom_rational(const Rational &x, unsigned long k);

/// Falling factorial (N)_m; (N)_0 = 1 and (N)_{-1} = 1/(N+1).
Rational falling_factorial(long n, long m);

/// B_k with B_1 = -1/2.
Rational bernoulli(unsigned k);
/// (-1)^k B_k.
Rational bernoulli_tilde(unsigned k);
/// Coefficients c_j of x^j in B_k(x).
std::vector<Rational> bernoulli_poly(unsigned k);
Rational eval_bernoulli_poly(unsigned k, const Rational &x);

/// prod_{k=-M}^{b-1} (k - x). Throws DegenerateFactor when a factor vanishes.
Rational pochhammer_shift(const Rational &x, unsigned long M, unsigned long b);

/// zeta(-M) = (-1)^M B_{M+1}/(M+1).
Rational riemann_zeta_exact_nonpositive(unsigned long M);

} // namespace mzv

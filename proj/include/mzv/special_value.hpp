#pragma once

#include "mzv/exactnum.hpp"
#include "mzv/numeric.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mzv {

/// Formal product of Gamma(r), 0 < r < 1, times an optional pi or arctan(p/q).
class ConstantProduct {
public:
  enum class Extra { None, Pi, Arctan };

  ConstantProduct() = default;
  static ConstantProduct gammas(std::vector<Rational> rs);
  static ConstantProduct pi();
  static ConstantProduct arctan(const Rational &x);

  const std::vector<Rational> &gamma_factors() const { return gammas_; }
  Extra extra() const { return extra_; }
  const Rational &arctan_arg() const { return arctan_arg_; }

  ConstantProduct operator*(const ConstantProduct &other) const;
  bool operator==(const ConstantProduct &other) const;
  bool operator<(const ConstantProduct &other) const;

  /// ["Gamma(1/3)", "Gamma(1/3)", "pi"]
  std::vector<std::string> labels() const;
  Numeric evaluate(int digits = kDefaultDigits) const;

private:
  std::vector<Rational> gammas_;
  Extra extra_ = Extra::None;
  Rational arctan_arg_{0};
};

struct MixedTerm {
  Rational coeff;
  ConstantProduct constant;
};

struct Mixed {
  Rational base;
  std::vector<MixedTerm> terms;
};

class SpecialValue {
public:
  enum class Kind { Exact, Mixed, Numeric };

  SpecialValue() : data_(Rational(0)) {}
  SpecialValue(const Rational &q) : data_(q) {}
  SpecialValue(const Numeric &n) : data_(n) {}
  SpecialValue(const Mixed &m);

  static SpecialValue term(const Rational &coeff, const ConstantProduct &c);

  Kind kind() const;
  bool is_exact() const { return kind() == Kind::Exact; }
  const Rational &exact() const;
  const Mixed &mixed() const;
  const Numeric &numeric() const;

  Numeric to_numeric(int digits = kDefaultDigits) const;

  SpecialValue operator+(const SpecialValue &other) const;
  SpecialValue operator-(const SpecialValue &other) const;
  SpecialValue operator-() const;
  SpecialValue &operator+=(const SpecialValue &other);
  /// Scaling by an exact rational keeps the kind.
  friend SpecialValue operator*(const Rational &a, const SpecialValue &v);
  /// Product with anything numeric collapses to Numeric.
  SpecialValue operator*(const SpecialValue &other) const;

  std::string kind_name() const;

private:
  std::variant<Rational, Mixed, Numeric> data_;
};

SpecialValue operator*(const Rational &a, const SpecialValue &v);

} // namespace mzv

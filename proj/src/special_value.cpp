#include "mzv/special_value.hpp"

#include "mzv/error.hpp"

#include <algorithm>

namespace mzv {

ConstantProduct ConstantProduct::gammas(std::vector<Rational> rs) {
  for (auto &r : rs)
    if (r <= 0 || r >= 1)
      fail(ErrorCode::DomainViolation, "Gamma factor argument must lie in (0,1)");
  std::sort(rs.begin(), rs.end());
  ConstantProduct c;
  c.gammas_ = std::move(rs);
  return c;
}

ConstantProduct ConstantProduct::pi() {
  ConstantProduct c;
  c.extra_ = Extra::Pi;
  return c;
}

ConstantProduct ConstantProduct::arctan(const Rational &x) {
  ConstantProduct c;
  c.extra_ = Extra::Arctan;
  c.arctan_arg_ = x;
  return c;
}

ConstantProduct ConstantProduct::operator*(const ConstantProduct &other) const {
  if (extra_ != Extra::None && other.extra_ != Extra::None)
    fail(ErrorCode::InvalidArgument, "constant product holds at most one extra factor");
  ConstantProduct c;
  c.gammas_ = gammas_;
  c.gammas_.insert(c.gammas_.end(), other.gammas_.begin(), other.gammas_.end());
  std::sort(c.gammas_.begin(), c.gammas_.end());
  const ConstantProduct &src = extra_ != Extra::None ? *this : other;
  c.extra_ = src.extra_;
  c.arctan_arg_ = src.arctan_arg_;
  return c;
}

bool ConstantProduct::operator==(const ConstantProduct &other) const {
  return gammas_ == other.gammas_ && extra_ == other.extra_ &&
         (extra_ != Extra::Arctan || arctan_arg_ == other.arctan_arg_);
}

bool ConstantProduct::operator<(const ConstantProduct &other) const {
  if (gammas_ != other.gammas_) return gammas_ < other.gammas_;
  if (extra_ != other.extra_) return extra_ < other.extra_;
  if (extra_ == Extra::Arctan) return arctan_arg_ < other.arctan_arg_;
  return false;
}

std::vector<std::string> ConstantProduct::labels() const {
  std::vector<std::string> out;
  for (auto &r : gammas_) out.push_back("Gamma(" + r.get_str() + ")");
  if (extra_ == Extra::Pi) out.push_back("pi");
  if (extra_ == Extra::Arctan) out.push_back("arctan(" + arctan_arg_.get_str() + ")");
  return out;
}

Numeric ConstantProduct::evaluate(int digits) const {
  Numeric v = Numeric::exact(Rational(1));
  for (auto &r : gammas_) v = v * gamma_rational_numeric(r, digits);
  if (extra_ == Extra::Pi) v = v * Numeric::of(bf_pi(), ulp_of(bf_pi()));
  if (extra_ == Extra::Arctan) {
    BigFloat a = atan(to_bigfloat(arctan_arg_));
    v = v * Numeric::of(a, 4 * ulp_of(a));
  }
  return v;
}

static void normalize(Mixed &m) {
  std::vector<MixedTerm> merged;
  for (auto &t : m.terms) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const MixedTerm &x) { return x.constant == t.constant; });
    if (it == merged.end())
      merged.push_back(t);
    else
      it->coeff += t.coeff;
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const MixedTerm &x) { return x.coeff == 0; }),
               merged.end());
  std::sort(merged.begin(), merged.end(),
            [](const MixedTerm &a, const MixedTerm &b) { return a.constant < b.constant; });
  m.terms = std::move(merged);
}

SpecialValue::SpecialValue(const Mixed &m) {
  Mixed c = m;
  normalize(c);
  if (c.terms.empty())
    data_ = c.base;
  else
    data_ = c;
}

SpecialValue SpecialValue::term(const Rational &coeff, const ConstantProduct &c) {
  Mixed m;
  m.base = 0;
  if (c.gamma_factors().empty() && c.extra() == ConstantProduct::Extra::None) {
    m.base = coeff;
  } else {
    m.terms.push_back({coeff, c});
  }
  return SpecialValue(m);
}

SpecialValue::Kind SpecialValue::kind() const {
  switch (data_.index()) {
  case 0: return Kind::Exact;
  case 1: return Kind::Mixed;
  default: return Kind::Numeric;
  }
}

std::string SpecialValue::kind_name() const {
  switch (kind()) {
  case Kind::Exact: return "exact";
  case Kind::Mixed: return "mixed";
  default: return "numeric";
  }
}

const Rational &SpecialValue::exact() const {
  if (kind() != Kind::Exact) fail(ErrorCode::InvalidArgument, "value is not exact");
  return std::get<Rational>(data_);
}

const Mixed &SpecialValue::mixed() const {
  if (kind() != Kind::Mixed) fail(ErrorCode::InvalidArgument, "value is not mixed");
  return std::get<Mixed>(data_);
}

const Numeric &SpecialValue::numeric() const {
  if (kind() != Kind::Numeric) fail(ErrorCode::InvalidArgument, "value is not numeric");
  return std::get<Numeric>(data_);
}

Numeric SpecialValue::to_numeric(int digits) const {
  switch (kind()) {
  case Kind::Exact: return Numeric::exact(exact());
  case Kind::Numeric: return numeric();
  case Kind::Mixed: {
    const Mixed &m = mixed();
    Numeric v = Numeric::exact(m.base);
    for (auto &t : m.terms) v = v + t.coeff * t.constant.evaluate(digits);
    return v;
  }
  }
  return Numeric{};
}

static Mixed as_mixed(const SpecialValue &v) {
  if (v.kind() == SpecialValue::Kind::Exact) return Mixed{v.exact(), {}};
  return v.mixed();
}

SpecialValue SpecialValue::operator+(const SpecialValue &other) const {
  if (kind() == Kind::Numeric || other.kind() == Kind::Numeric)
    return SpecialValue(to_numeric() + other.to_numeric());
  if (kind() == Kind::Exact && other.kind() == Kind::Exact)
    return SpecialValue(Rational(exact() + other.exact()));
  Mixed a = as_mixed(*this), b = as_mixed(other);
  a.base += b.base;
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return SpecialValue(a);
}

SpecialValue SpecialValue::operator-() const { return Rational(-1) * *this; }

SpecialValue SpecialValue::operator-(const SpecialValue &other) const {
  return *this + (-other);
}

SpecialValue &SpecialValue::operator+=(const SpecialValue &other) {
  *this = *this + other;
  return *this;
}

SpecialValue operator*(const Rational &a, const SpecialValue &v) {
  switch (v.kind()) {
  case SpecialValue::Kind::Exact: return SpecialValue(Rational(a * v.exact()));
  case SpecialValue::Kind::Numeric: return SpecialValue(a * v.numeric());
  case SpecialValue::Kind::Mixed: {
    Mixed m = v.mixed();
    m.base *= a;
    for (auto &t : m.terms) t.coeff *= a;
    return SpecialValue(m);
  }
  }
  return SpecialValue();
}

SpecialValue SpecialValue::operator*(const SpecialValue &other) const {
  if (kind() == Kind::Exact) return exact() * other;
  if (other.kind() == Kind::Exact) return other.exact() * *this;
  return SpecialValue(to_numeric() * other.to_numeric());
}

} // namespace mzv

#include "mzv/json_io.hpp"

#include "mzv/error.hpp"

namespace mzv {

json rational_json(const Rational &q) { return rational_to_string(q); }

Rational rational_from_json(const json &j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorCode::ParseError, "rational must be a string \"p/q\" or an integer");
}

json numeric_json(const Numeric &v, int digits) {
  return json{{"value", to_decimal(v.value, digits)}, {"err", err_to_decimal(v.err)}};
}

json special_value_json(const SpecialValue &v, int digits) {
  json out;
  out["kind"] = v.kind_name();
  switch (v.kind()) {
  case SpecialValue::Kind::Exact:
    out["value"] = rational_json(v.exact());
    break;
  case SpecialValue::Kind::Mixed: {
    const Mixed &m = v.mixed();
    out["base"] = rational_json(m.base);
    json terms = json::array();
    for (auto &t : m.terms) terms.push_back({{"coeff", rational_json(t.coeff)}, {"constants", t.constant.labels()}});
    out["terms"] = terms;
    out["numeric"] = numeric_json(v.to_numeric(digits), digits);
    break;
  }
  case SpecialValue::Kind::Numeric: {
    json n = numeric_json(v.numeric(), digits);
    out["value"] = n["value"];
    out["err"] = n["err"];
    break;
  }
  }
  return out;
}

json poly_json(const MPoly &p) {
  json terms = json::array();
  for (auto &[e, c] : p.terms()) terms.push_back({{"c", rational_json(c)}, {"e", e}});
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

MPoly poly_from_json(const json &j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    fail(ErrorCode::ParseError, "polynomial JSON needs \"nvars\" and \"terms\"");
  unsigned n = j.at("nvars").get<unsigned>();
  MPoly p(n);
  for (auto &t : j.at("terms")) {
    MultiIndex e = t.at("e").get<MultiIndex>();
    if (e.size() != n) fail(ErrorCode::DimensionMismatch, "exponent length differs from nvars");
    p.add_term(e, rational_from_json(t.at("c")));
  }
  return p;
}

PolyFamily family_from_json(const json &j) {
  const json &arr = j.is_object() ? j.at("polys") : j;
  if (!arr.is_array()) fail(ErrorCode::ParseError, "family must be an array of polynomials");
  PolyFamily f;
  unsigned idx = 1;
  for (auto &p : arr) {
    MPoly poly = p.is_string() ? parse_poly(p.get<std::string>(), idx) : poly_from_json(p);
    f.P.push_back(std::move(poly));
    ++idx;
  }
  return f;
}

json flags_json(const HypothesisFlags &f) {
  json pos = json::array();
  for (auto c : f.positivity) pos.push_back(certainty_name(c));
  return json{{"unverified_hypothesis", f.unverified},
              {"positivity", pos},
              {"h0s_pass", f.h0s_pass},
              {"h0s_warning", f.h0s_warning},
              {"ellipticity", certainty_name(f.ellipticity)},
              {"notes", f.notes}};
}

json identity_report_json(const IdentityReport &r, bool timings) {
  json j{{"kind", r.kind},
         {"params", r.params},
         {"lhs", rational_json(r.lhs)},
         {"rhs", rational_json(r.rhs)},
         {"equal", r.equal}};
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

} // namespace mzv

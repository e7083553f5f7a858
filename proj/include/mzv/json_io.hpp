#pragma once

#include "mzv/identities.hpp"
#include "mzv/mpoly.hpp"
#include "mzv/polyzeta.hpp"
#include "mzv/special_value.hpp"

#include "json.hpp"

namespace mzv {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

json rational_json(const Rational &q);
Rational rational_from_json(const json &j);

json numeric_json(const Numeric &v, int digits = kDefaultDigits);

/// {"kind":"exact","value":"p/q"} and the mixed/numeric variants.
json special_value_json(const SpecialValue &v, int digits = kDefaultDigits);

/// {"nvars": n, "terms": [{"c": "p/q", "e": [...]}, ...]}
json poly_json(const MPoly &p);
MPoly poly_from_json(const json &j);

/// Accepts {"polys":[...]} or a bare array; entries are poly JSON objects or text.
PolyFamily family_from_json(const json &j);
json flags_json(const HypothesisFlags &f);

/// elapsed_ms is included only when timings is set.
json identity_report_json(const IdentityReport &r, bool timings = false);

} // namespace mzv

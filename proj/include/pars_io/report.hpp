#pragma once

// Machine-readable reports. Rationals are always "num/den" strings.

#include <json.hpp>

#include "pars/checkers.hpp"
#include "pars/dist.hpp"
#include "pars/limit.hpp"
#include "pars/tree.hpp"

namespace pars::io {

using Json = nlohmann::ordered_json;

std::string rational_str(const Rational& q);
inline std::string rational_str(const Weight& w) { return rational_str(w.value()); }

/// Inverse of rational_str. Throws WeightError.
Rational parse_rational(const std::string& s);

/// [{"weight": "1/2", "element": "a"}, …]
Json to_json(const PointDist& d);
/// {"a": "1/2", …}
Json to_json(const CanonicalDist& d);
Json to_json(const CompTree& t);
Json to_json(const CheckVerdict& v);
Json to_json(const LimitReport& r);

}  // namespace pars::io

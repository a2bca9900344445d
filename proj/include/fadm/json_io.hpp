#pragma once

#include <json.hpp>

#include "fadm/gamma.hpp"
#include "fadm/series.hpp"

namespace fadm {

/// Atoms as [{"rational":[num,den],"factors":[[k,e],...]}, ...]. Integers that
/// fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
nlohmann::json to_json(const GammaCoefficient& c);
GammaCoefficient coefficient_from_json(const nlohmann::json& j);

/// {"max_grade": g, "truncated": b, "terms": [[k, <coefficient>], ...]}
nlohmann::json to_json(const FracSeries& s);
FracSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace fadm

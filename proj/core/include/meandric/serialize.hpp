#pragma once

#include <nlohmann/json.hpp>

#include "meandric/gauss.hpp"
#include "meandric/meander.hpp"

namespace meandric {

// Wire formats. Counts always travel as decimal strings so consumers never
// depend on 64-bit limits.

/// {"n": 2, "upper": [1, 2], "lower": [2, 1]}
nlohmann::json to_json(const MeandricSystem& s);
MeandricSystem system_from_json(const nlohmann::json& j);

/// {"n": 3, "omega": 2, "coeffs": {"0": "5", "4": "1"}}
nlohmann::json to_json(const ExpansionCoefficients& e);
ExpansionCoefficients expansion_from_json(const nlohmann::json& j);

}  // namespace meandric

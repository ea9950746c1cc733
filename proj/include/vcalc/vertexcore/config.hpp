#pragma once

#include <filesystem>

#include <json.hpp>

#include "vcalc/vertexcore/algebra.hpp"

namespace vcalc {

// Structured-text (JSON) form of an algebra declaration:
//   {"format": "vcalc-algebra/1", "name": ..., "unlisted_brackets_vanish": true,
//    "generators": [{"name": "\\Phi_{-1}", "parity": "odd", "weight": "1/2", "charged": false}],
//    "brackets": [{"left": ..., "right": ..., "lambda": {"0": "<state>", "1": "<state>"}}],
//    "derivative_rules": [{"generator": ..., "derivative": "<state>"}]}
// States use the notation of notation.hpp.
nlohmann::json algebra_to_json(const VertexAlgebra& alg);
// Parses and validates (skew-symmetry of doubly declared pairs). Throws ConfigError.
AlgebraPtr algebra_from_json(const nlohmann::json& doc);
AlgebraPtr load_algebra(const std::filesystem::path& path);

// Throws ConfigError when a pair declared in both orders violates skew-symmetry.
void check_skew_symmetry(const AlgebraPtr& alg);

}  // namespace vcalc

#pragma once

#include <string>

#include <json.hpp>

#include "reflectode/solver.hpp"

namespace reflectode {

// Measure JSON: {"density": "expr-or-null", "atoms": [{"t": number, "a": number}, ...]}
// Both keys optional; unknown keys rejected.
Measure measure_from_json(const nlohmann::json& j);

// Problem file:
//   {"m": number, "T": number, "h": "expr",
//    "bc": {"type": "periodic"|"antiperiodic"|"lambda"|"functional",
//           "lambda"?: number, "F"?: Measure, "c"?: number},
//    "quad"?: {"abs_tol": number, "rel_tol": number}}
// Schema-validated before any computation; unknown keys anywhere are a
// schema_error, as are missing/extra bc fields for the chosen type.
ProblemSpec problem_from_json(const nlohmann::json& j);

// Parses text, mapping JSON syntax errors to schema_error.
ProblemSpec problem_from_string(const std::string& text);

}  // namespace reflectode

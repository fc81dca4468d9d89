#include "reflectode/problem_io.hpp"

#include <set>

namespace reflectode {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const std::string& where) {
  if (!obj.is_object())
    throw schema_error(where + ": expected a JSON object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw schema_error(where + ": unknown key \"" + key + "\"");
  for (const auto& key : required)
    if (!obj.contains(key))
      throw schema_error(where + ": missing required key \"" + key + "\"");
}

double number_at(const json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number())
    throw schema_error(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

std::string string_at(const json& obj, const std::string& key,
                      const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw schema_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Expr parse_expr_at(const json& obj, const std::string& key, const std::string& where) {
  const std::string src = string_at(obj, key, where);
  try {
    return Expr::parse(src);
  } catch (const parse_error& e) {
    throw schema_error(where + ": \"" + key + "\": " + e.what());
  }
}

}  // namespace

Measure measure_from_json(const json& j) {
  require_keys(j, {"density", "atoms"}, {}, "F");
  std::optional<Expr> density;
  if (j.contains("density") && !j.at("density").is_null())
    density = parse_expr_at(j, "density", "F");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    const auto& arr = j.at("atoms");
    if (!arr.is_array()) throw schema_error("F: \"atoms\" must be an array");
    for (const auto& a : arr) {
      require_keys(a, {"t", "a"}, {"t", "a"}, "F.atoms[]");
      atoms.push_back({number_at(a, "t", "F.atoms[]"), number_at(a, "a", "F.atoms[]")});
    }
  }
  try {
    return Measure::make(std::move(density), std::move(atoms));
  } catch (const domain_error& e) {
    throw schema_error(std::string("F: ") + e.what());
  }
}

ProblemSpec problem_from_json(const json& j) {
  require_keys(j, {"m", "T", "h", "bc", "quad"}, {"m", "T", "h", "bc"}, "problem");

  ProblemSpec spec;
  spec.m = number_at(j, "m", "problem");
  spec.T = number_at(j, "T", "problem");
  if (!(spec.T > 0.0)) throw schema_error("problem: \"T\" must be positive");
  spec.h = parse_expr_at(j, "h", "problem");

  const auto& bc = j.at("bc");
  if (!bc.is_object() || !bc.contains("type") || !bc.at("type").is_string())
    throw schema_error("bc: missing or non-string \"type\"");
  const std::string type = bc.at("type").get<std::string>();
  if (type == "periodic") {
    require_keys(bc, {"type"}, {"type"}, "bc(periodic)");
    spec.bc = Periodic{};
  } else if (type == "antiperiodic") {
    require_keys(bc, {"type"}, {"type"}, "bc(antiperiodic)");
    spec.bc = Antiperiodic{};
  } else if (type == "lambda") {
    require_keys(bc, {"type", "lambda"}, {"type", "lambda"}, "bc(lambda)");
    spec.bc = Lambda{number_at(bc, "lambda", "bc(lambda)")};
  } else if (type == "functional") {
    require_keys(bc, {"type", "F", "c"}, {"type", "F", "c"}, "bc(functional)");
    spec.bc = Functional{measure_from_json(bc.at("F")),
                         number_at(bc, "c", "bc(functional)")};
  } else {
    throw schema_error("bc: unknown type \"" + type + "\"");
  }

  if (j.contains("quad")) {
    const auto& q = j.at("quad");
    require_keys(q, {"abs_tol", "rel_tol"}, {}, "quad");
    if (q.contains("abs_tol")) spec.quad.abs_tol = number_at(q, "abs_tol", "quad");
    if (q.contains("rel_tol")) spec.quad.rel_tol = number_at(q, "rel_tol", "quad");
    if (!(spec.quad.abs_tol > 0.0) || !(spec.quad.rel_tol > 0.0))
      throw schema_error("quad: tolerances must be positive");
  }
  return spec;
}

ProblemSpec problem_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("problem: invalid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

}  // namespace reflectode

#include <doctest.h>

#include "reflectode/problem_io.hpp"

using namespace reflectode;

TEST_CASE("all four boundary condition types parse") {
  const auto per = problem_from_string(
      R"json({"m": 1, "T": 0.5, "h": "exp(t)", "bc": {"type": "periodic"}})json");
  CHECK(std::holds_alternative<Periodic>(per.bc));
  CHECK(per.m == 1.0);
  CHECK(per.T == 0.5);

  const auto anti = problem_from_string(
      R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "antiperiodic"}})json");
  CHECK(std::holds_alternative<Antiperiodic>(anti.bc));

  const auto lam = problem_from_string(
      R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "lambda", "lambda": 2.5}})json");
  CHECK(std::get<Lambda>(lam.bc).lambda == 2.5);

  const auto fun = problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "exp(t)",
    "bc": {"type": "functional",
           "F": {"density": "1", "atoms": [{"t": 0.1, "a": -2}]},
           "c": 1.5}})json");
  const auto& f = std::get<Functional>(fun.bc);
  CHECK(f.c == 1.5);
  CHECK(f.F.density.has_value());
  CHECK(f.F.atoms.size() == 1);
  CHECK(f.F.atoms[0].t == 0.1);
}

TEST_CASE("null density means atoms only") {
  const auto spec = problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0",
    "bc": {"type": "functional",
           "F": {"density": null, "atoms": [{"t": 0, "a": 1}]},
           "c": 0}})json");
  CHECK_FALSE(std::get<Functional>(spec.bc).F.density.has_value());
}

TEST_CASE("quad tolerances are honored") {
  const auto spec = problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0", "bc": {"type": "periodic"},
    "quad": {"abs_tol": 1e-8, "rel_tol": 1e-7}})json");
  CHECK(spec.quad.abs_tol == 1e-8);
  CHECK(spec.quad.rel_tol == 1e-7);
}

TEST_CASE("unknown keys rejected at every level") {
  CHECK_THROWS_AS(problem_from_string(
                      R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "periodic"}, "x": 1})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(
                      R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "periodic", "c": 1}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0",
    "bc": {"type": "functional", "F": {"density": "1", "mass": 2}, "c": 0}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0", "bc": {"type": "periodic"},
    "quad": {"abs_tol": 1e-8, "depth": 9}})json"),
                  schema_error);
}

TEST_CASE("missing required keys rejected") {
  CHECK_THROWS_AS(problem_from_string(R"json({"T": 0.5, "h": "0", "bc": {"type": "periodic"}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "lambda"}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0", "bc": {"type": "functional", "c": 0}})json"),
                  schema_error);
}

TEST_CASE("invalid values rejected") {
  CHECK_THROWS_AS(problem_from_string(R"json({"m": 1, "T": -0.5, "h": "0", "bc": {"type": "periodic"}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({"m": "one", "T": 0.5, "h": "0", "bc": {"type": "periodic"}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({"m": 1, "T": 0.5, "h": "0", "bc": {"type": "weird"}})json"),
                  schema_error);
  CHECK_THROWS_AS(problem_from_string("not json at all"), schema_error);
  CHECK_THROWS_AS(problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0", "bc": {"type": "periodic"},
    "quad": {"abs_tol": -1}})json"),
                  schema_error);
}

TEST_CASE("expression errors surface as schema errors with position info") {
  try {
    problem_from_string(R"json({"m": 1, "T": 0.5, "h": "2**t", "bc": {"type": "periodic"}})json");
    FAIL("expected schema_error");
  } catch (const schema_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("offset 2") != std::string::npos);
  }
}

TEST_CASE("duplicate atoms rejected") {
  CHECK_THROWS_AS(problem_from_string(R"json({
    "m": 1, "T": 0.5, "h": "0",
    "bc": {"type": "functional",
           "F": {"atoms": [{"t": 0.1, "a": 1}, {"t": 0.1, "a": 2}]},
           "c": 0}})json"),
                  schema_error);
}

TEST_CASE("measure json accepts empty object") {
  const Measure F = measure_from_json(nlohmann::json::parse("{}"));
  CHECK_FALSE(F.density.has_value());
  CHECK(F.atoms.empty());
}

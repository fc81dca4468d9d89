// reflectode — solve x'(t) + m x(-t) = h(t) on [-T,T] under periodic,
// antiperiodic, jump and linear-functional boundary conditions, dump Green's
// function surfaces, run kernel verification suites, and compute positivity
// certificates.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reflectode/positivity.hpp"
#include "reflectode/problem_io.hpp"
#include "reflectode/solver.hpp"
#include "reflectode/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace reflectode;

// Worked-example constants from the published account of the m = 1, T = 1/2,
// h = e^t, Lebesgue-F problem. Emitted as documented reference values next to
// computed ones; the computed values are authoritative (see README on known
// inconsistencies in the published figures).
constexpr double kPublishedK2 = 4.91464;
constexpr double kPublishedThresholdClaim = 0.850502;

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("REFLECTODE_LOG");
    if (!env) return LogLevel::Warn;
    const std::string v(env);
    if (v == "error") return LogLevel::Error;
    if (v == "warn") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

void log_at(LogLevel lvl, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (lvl <= log_level())
    std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(lvl)], msg.c_str());
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes to the path, or to stdout for "-".
void emit(const std::string& out, const std::string& data) {
  if (out == "-") {
    std::fwrite(data.data(), 1, data.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw error("cannot open output file: " + out);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw schema_error("cannot open problem file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return problem_from_string(ss.str());
}

const char* bc_name(const BoundaryCondition& bc) {
  if (std::holds_alternative<Periodic>(bc)) return "periodic";
  if (std::holds_alternative<Antiperiodic>(bc)) return "antiperiodic";
  if (std::holds_alternative<Lambda>(bc)) return "lambda";
  return "functional";
}

int cmd_solve(const std::string& problem_path, int grid_n, const std::string& out,
              std::optional<double> abs_tol, std::optional<double> rel_tol,
              std::optional<double> c_override, std::optional<double> lambda_override) {
  if (grid_n < 1) throw schema_error("--grid must be at least 1");
  ProblemSpec spec = load_problem(problem_path);
  if (abs_tol) spec.quad.abs_tol = *abs_tol;
  if (rel_tol) spec.quad.rel_tol = *rel_tol;
  if (c_override) {
    auto* f = std::get_if<Functional>(&spec.bc);
    if (!f) throw schema_error("--c is only valid for a functional boundary condition");
    f->c = *c_override;
  }
  if (lambda_override) {
    auto* l = std::get_if<Lambda>(&spec.bc);
    if (!l) throw schema_error("--lambda is only valid for a lambda boundary condition");
    l->lambda = *lambda_override;
  }
  log_at(LogLevel::Info, std::string("solve: bc=") + bc_name(spec.bc) +
                             " m=" + fmt17(spec.m) + " T=" + fmt17(spec.T));

  const Solution sol = solve(spec);

  std::string csv = "t,u\n";
  for (int i = 0; i <= grid_n; ++i) {
    const double t = -spec.T + 2.0 * spec.T * i / grid_n;
    csv += fmt17(t);
    csv += ',';
    csv += fmt17(sol.evaluate(t));
    csv += '\n';
  }
  emit(out, csv);

  const auto u = [&sol](double t) { return sol.evaluate(t); };
  const auto h = [&spec](double t) { return spec.h.eval(t); };
  const double res = residual(u, h, spec.m, spec.T, 200);
  const double bres = boundary_residual(u, spec.bc, spec.T, spec.quad);
  std::fprintf(stderr, "residual: %.17g\nboundary residual: %.17g\n", res, bres);
  if (sol.lambda_used)
    std::fprintf(stderr, "lambda used: %.17g\n", *sol.lambda_used);
  return 0;
}

int cmd_green(const std::string& kind, double m, double T, int grid_n,
              const std::string& out) {
  if (grid_n < 1) throw schema_error("--grid must be at least 1");
  const KernelParams p(m, T);
  if (kind == "gbar")
    require_periodic(p);
  else
    require_antiperiodic(p);

  // s-lattice: the grid_n cell midpoints plus one quarter-step point, all
  // strictly interior and never on a diagonal with the t-lattice.
  std::vector<double> svals;
  svals.push_back(-T + T / (2.0 * grid_n));
  for (int j = 0; j < grid_n; ++j) svals.push_back(-T + (2.0 * j + 1.0) * T / grid_n);
  std::sort(svals.begin(), svals.end());

  std::string csv = "t,s,value\n";
  for (int i = 0; i <= grid_n; ++i) {
    const double t = -T + 2.0 * T * i / grid_n;
    for (double s : svals) {
      double v;
      if (kind == "gbar")
        v = gbar(t, s, p);
      else if (kind == "hbar")
        v = hbar(t, s, p);
      else
        v = h_kernel(t, s, p);
      csv += fmt17(t);
      csv += ',';
      csv += fmt17(s);
      csv += ',';
      csv += fmt17(v);
      csv += '\n';
    }
  }
  emit(out, csv);
  return 0;
}

int cmd_positivity(const std::string& problem_path, bool with_threshold,
                   const std::string& out, std::optional<double> abs_tol,
                   std::optional<double> rel_tol, std::optional<double> c_override) {
  ProblemSpec spec = load_problem(problem_path);
  if (abs_tol) spec.quad.abs_tol = *abs_tol;
  if (rel_tol) spec.quad.rel_tol = *rel_tol;
  if (!std::holds_alternative<Functional>(spec.bc))
    throw schema_error("positivity requires a functional boundary condition");
  if (c_override) std::get<Functional>(spec.bc).c = *c_override;

  PositivityReport rep = certify_positive(spec, spec.quad);
  if (with_threshold) rep.empirical_threshold = empirical_threshold(spec, spec.quad);

  ordered_json j;
  j["alpha"] = rep.alpha;
  j["M"] = rep.M;
  j["c"] = std::get<Functional>(spec.bc).c;
  if (rep.k1)
    j["k1"] = *rep.k1;
  else
    j["k1"] = nullptr;
  if (rep.k2)
    j["k2"] = ordered_json{{"computed", *rep.k2}, {"published", kPublishedK2}};
  else
    j["k2"] = nullptr;
  j["tv_mu"] = rep.tv_mu;
  j["h_norm1"] = rep.h_norm1;
  j["certified"] = rep.certified;
  j["min_u_on_grid"] = rep.min_u_on_grid;
  if (rep.empirical_threshold)
    j["empirical_threshold"] =
        ordered_json{{"computed", *rep.empirical_threshold},
                     {"published_claim", kPublishedThresholdClaim}};
  else
    j["empirical_threshold"] = nullptr;
  emit(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& kind, double m, double T, const std::string& out) {
  const KernelParams p(m, T);
  const KernelKind kk =
      kind == "periodic" ? KernelKind::Periodic : KernelKind::Antiperiodic;
  const VerifyReport rep = kernel_axiom_suite(kk, p);

  ordered_json j;
  j["kind"] = kind;
  j["m"] = m;
  j["T"] = T;
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back(ordered_json{{"name", c.name},
                                       {"max_error", c.max_error},
                                       {"tolerance", c.tolerance},
                                       {"passed", c.passed}});
  j["all_passed"] = rep.all_passed();
  emit(out, j.dump(2) + "\n");

  for (const auto& c : rep.checks)
    std::fprintf(stderr, "%-60s  %11.3e  (tol %8.1e)  %s\n", c.name.c_str(),
                 c.max_error, c.tolerance, c.passed ? "pass" : "FAIL");
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's-function solver for x'(t) + m x(-t) = h(t) on [-T,T]"};
  app.require_subcommand(1);

  std::string problem_path, out = "-", kind;
  int grid_n = 100;
  bool with_threshold = false;
  double m = 1.0, T = 0.5;
  std::optional<double> abs_tol, rel_tol, c_override, lambda_override;

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem file, emit t,u CSV");
  solve_cmd->add_option("--problem", problem_path, "problem JSON file")->required();
  solve_cmd->add_option("--grid", grid_n, "number of grid cells (rows = grid+1)");
  solve_cmd->add_option("--out", out, "output path, - for stdout");
  solve_cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
  solve_cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  solve_cmd->add_option("--c", c_override, "override functional c");
  solve_cmd->add_option("--lambda", lambda_override, "override boundary jump lambda");

  auto* green_cmd = app.add_subcommand("green", "emit t,s,value CSV of a kernel");
  green_cmd->add_option("--kind", kind, "gbar | hbar | h")
      ->required()
      ->check(CLI::IsMember({"gbar", "hbar", "h"}));
  green_cmd->add_option("--m", m, "equation coefficient")->required();
  green_cmd->add_option("--T", T, "half-length of the interval")->required();
  green_cmd->add_option("--grid", grid_n, "lattice density");
  green_cmd->add_option("--out", out, "output path, - for stdout");

  auto* pos_cmd = app.add_subcommand("positivity", "positivity constants and certificate");
  pos_cmd->add_option("--problem", problem_path, "problem JSON file")->required();
  pos_cmd->add_flag("--threshold", with_threshold, "also compute the empirical threshold");
  pos_cmd->add_option("--out", out, "output path, - for stdout");
  pos_cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
  pos_cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
  pos_cmd->add_option("--c", c_override, "override functional c");

  auto* verify_cmd = app.add_subcommand("verify", "run a kernel axiom suite");
  verify_cmd->add_option("--kind", kind, "periodic | antiperiodic")
      ->required()
      ->check(CLI::IsMember({"periodic", "antiperiodic"}));
  verify_cmd->add_option("--m", m, "equation coefficient")->required();
  verify_cmd->add_option("--T", T, "half-length of the interval")->required();
  verify_cmd->add_option("--out", out, "output path, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return cmd_solve(problem_path, grid_n, out, abs_tol, rel_tol, c_override,
                       lambda_override);
    if (green_cmd->parsed()) return cmd_green(kind, m, T, grid_n, out);
    if (pos_cmd->parsed())
      return cmd_positivity(problem_path, with_threshold, out, abs_tol, rel_tol,
                            c_override);
    if (verify_cmd->parsed()) return cmd_verify(kind, m, T, out);
  } catch (const schema_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const resonance_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const orientation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const quadrature_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

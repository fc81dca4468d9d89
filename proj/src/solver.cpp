#include "reflectode/solver.hpp"

#include <cmath>

namespace reflectode {
namespace {

Solution xi_family_solution(const KernelParams& p, const QuadConfig& cfg,
                            const std::function<double(double)>& h, double lambda,
                            std::optional<double> gap) {
  Solution sol;
  sol.lambda_used = lambda;
  sol.diagnostics = {cfg.abs_tol, cfg.rel_tol, gap};
  sol.evaluate = [p, cfg, h, lambda](double t) {
    double u = xi(h, t, p, cfg);
    if (lambda != 0.0) u += lambda * gbar_minus_T(t, p);
    return u;
  };
  return sol;
}

Solution solve_periodic_fn(const KernelParams& p, const QuadConfig& cfg,
                           const std::function<double(double)>& h) {
  require_periodic(p);
  return xi_family_solution(p, cfg, h, 0.0, std::nullopt);
}

Solution solve_antiperiodic_fn(const KernelParams& p, const QuadConfig& cfg,
                               const std::function<double(double)>& h) {
  require_antiperiodic(p);
  Solution sol;
  sol.diagnostics = {cfg.abs_tol, cfg.rel_tol, std::nullopt};
  sol.evaluate = [p, cfg, h](double t) {
    const double at = std::fabs(t);
    return integrate([&](double s) { return hbar(t, s, p) * h(s); }, -p.T, p.T,
                     {-at, at}, cfg);
  };
  return sol;
}

Solution solve_lambda_fn(const KernelParams& p, const QuadConfig& cfg,
                         const std::function<double(double)>& h, double lambda) {
  require_periodic(p);
  return xi_family_solution(p, cfg, h, lambda, std::nullopt);
}

Solution solve_functional_fn(const KernelParams& p, const QuadConfig& cfg,
                             const std::function<double(double)>& h,
                             const Measure& F, double c, double eps_gap) {
  require_periodic(p);

  const double gap = nonresonance_gap(F, p, cfg);
  if (std::fabs(gap) <= eps_gap)
    throw resonance_error(
        "functional resonance: F(cos mt) = F(sin mt) within eps_gap, "
        "no unique solution");

  // F(Gbar(.,-T)) = gap / (2 sin alpha), by linearity of F.
  const double f_gbar_mT = gap / (2.0 * std::sin(p.alpha));

  // F(Xi(h)): outer functional over t, inner kernel row over s; the inner
  // breakpoints depend on the outer node.
  const double f_xi_h = apply(
      F, [&](double t) { return xi(h, t, p, cfg); }, p.T, cfg.relaxed(10.0));

  const double lambda = (c - f_xi_h) / f_gbar_mT;
  return xi_family_solution(p, cfg, h, lambda, gap);
}

std::function<double(double)> expr_fn(const Expr& e) {
  return [e](double t) { return e.eval(t); };
}

}  // namespace

double xi(const std::function<double(double)>& h, double t, const KernelParams& p,
          const QuadConfig& cfg) {
  const double at = std::fabs(t);
  return integrate([&](double s) { return gbar(t, s, p) * h(s); }, -p.T, p.T,
                   {-at, at}, cfg);
}

Solution solve_periodic(const ProblemSpec& spec) {
  return solve_periodic_fn(spec.kernel_params(), spec.quad, expr_fn(spec.h));
}

Solution solve_antiperiodic(const ProblemSpec& spec) {
  return solve_antiperiodic_fn(spec.kernel_params(), spec.quad, expr_fn(spec.h));
}

Solution solve_lambda(const ProblemSpec& spec) {
  const auto* bc = std::get_if<Lambda>(&spec.bc);
  if (!bc) throw domain_error("solve_lambda: spec.bc is not Lambda");
  return solve_lambda_fn(spec.kernel_params(), spec.quad, expr_fn(spec.h),
                         bc->lambda);
}

Solution solve_functional(const ProblemSpec& spec) {
  const auto* bc = std::get_if<Functional>(&spec.bc);
  if (!bc) throw domain_error("solve_functional: spec.bc is not Functional");
  return solve_functional_fn(spec.kernel_params(), spec.quad, expr_fn(spec.h),
                             bc->F, bc->c, spec.eps_gap);
}

Solution solve(const ProblemSpec& spec) {
  if (std::holds_alternative<Periodic>(spec.bc)) return solve_periodic(spec);
  if (std::holds_alternative<Antiperiodic>(spec.bc)) return solve_antiperiodic(spec);
  if (std::holds_alternative<Lambda>(spec.bc)) return solve_lambda(spec);
  return solve_functional(spec);
}

Solution solve(double m, double T, const std::function<double(double)>& h,
               const BoundaryCondition& bc, const QuadConfig& cfg, double eps_res,
               double eps_gap) {
  const KernelParams p(m, T, eps_res);
  if (std::holds_alternative<Periodic>(bc)) return solve_periodic_fn(p, cfg, h);
  if (std::holds_alternative<Antiperiodic>(bc))
    return solve_antiperiodic_fn(p, cfg, h);
  if (const auto* l = std::get_if<Lambda>(&bc))
    return solve_lambda_fn(p, cfg, h, l->lambda);
  const auto& f = std::get<Functional>(bc);
  return solve_functional_fn(p, cfg, h, f.F, f.c, eps_gap);
}

}  // namespace reflectode

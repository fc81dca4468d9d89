#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "reflectode/expr.hpp"
#include "reflectode/functional.hpp"
#include "reflectode/kernel.hpp"
#include "reflectode/quad.hpp"

namespace reflectode {

// Boundary condition families for x'(t) + m x(-t) = h(t) on I = [-T, T].
struct Periodic {};                       // x(-T) = x(T)
struct Antiperiodic {};                   // x(-T) + x(T) = 0
struct Lambda { double lambda; };         // x(-T) - x(T) = lambda
struct Functional {                       // F(x) = c
  Measure F;
  double c;
};

using BoundaryCondition = std::variant<Periodic, Antiperiodic, Lambda, Functional>;

struct ProblemSpec {
  double m;
  double T;
  Expr h;
  BoundaryCondition bc;
  QuadConfig quad = {};
  double eps_res = 1e-9;
  double eps_gap = kEpsGap;

  KernelParams kernel_params() const { return KernelParams(m, T, eps_res); }
};

struct SolutionDiagnostics {
  double abs_tol;
  double rel_tol;
  std::optional<double> gap;  // F(cos mt) - F(sin mt), functional problems only
};

// Evaluable solution. `evaluate` integrates the appropriate kernel row on each
// call; it is a pure closure over immutable data and safe to share.
struct Solution {
  std::function<double(double)> evaluate;
  std::optional<double> lambda_used;
  SolutionDiagnostics diagnostics;

  double operator()(double t) const { return evaluate(t); }
};

// Xi(h)(t) = integral over I of Gbar(t,s) h(s) ds, split at s = -|t| and |t|.
double xi(const std::function<double(double)>& h, double t, const KernelParams& p,
          const QuadConfig& cfg = {});

// u = Xi(h); the unique solution with x(-T) = x(T) when m != k pi / T.
Solution solve_periodic(const ProblemSpec& spec);

// u(t) = integral of Hbar(t,s) h(s) ds; unique when m != (k+1/2) pi / T.
Solution solve_antiperiodic(const ProblemSpec& spec);

// u = Xi(h) + lambda Gbar(.,-T); x(-T) - x(T) = lambda.
Solution solve_lambda(const ProblemSpec& spec);

// u = Xi(h) + lambda Gbar(.,-T) with lambda = (c - F(Xi(h))) / F(Gbar(.,-T)).
// Requires the nonresonance gap F(cos mt) - F(sin mt) to exceed eps_gap in
// absolute value. F(Xi(h)) is an iterated integral: the outer functional
// application runs at 10x relaxed tolerance over the inner kernel rows.
Solution solve_functional(const ProblemSpec& spec);

// Dispatch on spec.bc.
Solution solve(const ProblemSpec& spec);

// Same representation formulas for a forcing term given as a plain callable
// (the manufactured-solution oracle differentiates an expression numerically
// and feeds the result here).
Solution solve(double m, double T, const std::function<double(double)>& h,
               const BoundaryCondition& bc, const QuadConfig& cfg = {},
               double eps_res = 1e-9, double eps_gap = kEpsGap);

}  // namespace reflectode

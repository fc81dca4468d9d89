#pragma once

#include <functional>
#include <vector>

#include "reflectode/errors.hpp"

namespace reflectode {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;

  // Same budget with both tolerances scaled; used for outer integrals of
  // iterated double integrals.
  QuadConfig relaxed(double factor) const {
    return QuadConfig{abs_tol * factor, rel_tol * factor, max_depth};
  }
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
//
// The interval is first split at every breakpoint inside (a,b) — kernel rows
// are piecewise-analytic across the diagonals s = t and s = -t, so callers
// pass {-|t|, |t|} — then each piece is refined by bisection until the
// embedded error estimate meets max(abs_tol, rel_tol*|result|) prorated by
// sub-interval length. Kronrod nodes are interior, so f is never evaluated
// at a split point. Throws quadrature_error if max_depth is exhausted.
double integrate(const Integrand& f, double a, double b,
                 const std::vector<double>& breakpoints = {},
                 const QuadConfig& cfg = {});

}  // namespace reflectode

#pragma once

#include <functional>
#include <optional>

#include "reflectode/solver.hpp"

namespace reflectode {

struct PositivityReport {
  double alpha = 0.0;
  double M = 0.0;
  std::optional<double> k1;  // alpha in (0, pi/4) and positive gap only
  std::optional<double> k2;  // pure-Lebesgue functional only
  double tv_mu = 0.0;
  double h_norm1 = 0.0;
  bool certified = false;
  std::optional<double> empirical_threshold;
  double min_u_on_grid = 0.0;
};

// k1 = 2 M |mu|(I) ||h||_1 / (1 - tan alpha); u > 0 is guaranteed for c > k1.
double k1_constant(double alpha, double tv_mu, double h_norm1);

// k2 = (1 + 2M/(cot alpha - 1)) ||h||_1 / m, the sharper bound when F is
// Lebesgue measure on I.
double k2_constant(double alpha, double h_norm1, double m);

// f(alpha) = k2/k1 for the Lebesgue functional
//          = (1/(2 alpha)) (1 + sec alpha)/(1 + csc alpha),
// strictly decreasing from 1 at 0+ to 2/pi at pi/4-.
double ratio_f(double alpha);

struct Extrema {
  double min;
  double max;
};

// min and max over I of Gbar(.,-T): ((cot a - 1)/2, (cot a + 1)/2); positive
// for alpha in (0, pi/4).
Extrema gbar_minusT_extrema(double alpha);

enum class Ordering { Less, Greater };

// Compare f(g_a) with f(g_b) for f symmetric about `peak` and decreasing away
// from it, g affine: same side of the peak orders by distance, straddling
// resolves by whether the midpoint image lies below or above the peak. Throws
// inconclusive_error when g_a, g_b or the midpoint coincides with the peak
// within kEpsGeom. f itself is not consulted.
Ordering midpoint_compare(double peak, const std::function<double(double)>& f,
                          double g_a, double g_b);

// Pointwise a-priori estimate
//   |c Gbar(t,-T)/F(Gbar(.,-T))|
//   + [sup_s |Gbar(t,s)| + |Gbar(t,-T)/F(Gbar(.,-T))| sup_{t,s}|Gbar| |mu|(I)] ||h||_1
// with the sups taken on (row_grid+1)-point / (sup_grid+1)^2 grids inflated by
// a 1e-6 margin.
double solution_bound(double t, const ProblemSpec& spec, const QuadConfig& cfg = {},
                      int row_grid = 1000, int sup_grid = 400);

// Certify u > 0 for a functional problem with alpha in (0, pi/4) and
// F(cos mt) > F(sin mt): certified iff c > k1, or c > k2 when F is Lebesgue.
// The grid minimum over grid_n+1 points is always computed; a certificate
// contradicted by the grid throws certification_error instead of returning.
PositivityReport certify_positive(const ProblemSpec& spec, const QuadConfig& cfg = {},
                                  int grid_n = 2000);

// Smallest c (bisection to 1e-8) whose solution has nonnegative minimum,
// using the affinity u_c = u_0 + c w on a (grid_n+1)-point grid with
// golden-section refinement around the grid argmin. Brute-force oracle,
// independent of the k1/k2 route.
double empirical_threshold(const ProblemSpec& spec, const QuadConfig& cfg = {},
                           int grid_n = 4000);

}  // namespace reflectode

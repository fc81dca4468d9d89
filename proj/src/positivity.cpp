#include "reflectode/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace reflectode {
namespace {

constexpr double kPi4 = 0.785398163397448309615660845819876;

void require_alpha_range(double alpha, const char* who) {
  if (!(alpha > 0.0) || !(alpha < kPi4))
    throw domain_error(std::string(who) + ": alpha must lie in (0, pi/4)");
}

const Functional& functional_bc(const ProblemSpec& spec, const char* who) {
  const auto* bc = std::get_if<Functional>(&spec.bc);
  if (!bc) throw domain_error(std::string(who) + ": spec.bc is not Functional");
  return *bc;
}

double h_norm1(const ProblemSpec& spec, const QuadConfig& cfg) {
  const Expr h = spec.h;
  return integrate([h](double t) { return std::fabs(h.eval(t)); }, -spec.T,
                   spec.T, {}, cfg);
}

// Golden-section minimum of g on [a,b]; assumes local unimodality around the
// grid argmin it is given. Returns the refined minimum value.
double golden_min(const std::function<double(double)>& g, double a, double b) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = g(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

double k1_constant(double alpha, double tv_mu, double h_norm1) {
  require_alpha_range(alpha, "k1_constant");
  if (tv_mu < 0.0 || h_norm1 < 0.0)
    throw domain_error("k1_constant: tv_mu and h_norm1 must be nonnegative");
  return 2.0 * kernel_sup(alpha) * tv_mu * h_norm1 / (1.0 - std::tan(alpha));
}

double k2_constant(double alpha, double h_norm1, double m) {
  require_alpha_range(alpha, "k2_constant");
  if (!(m > 0.0)) throw domain_error("k2_constant: m must be positive");
  if (h_norm1 < 0.0) throw domain_error("k2_constant: h_norm1 must be nonnegative");
  const double cot = std::cos(alpha) / std::sin(alpha);
  return (1.0 + 2.0 * kernel_sup(alpha) / (cot - 1.0)) * h_norm1 / m;
}

double ratio_f(double alpha) {
  require_alpha_range(alpha, "ratio_f");
  const double sec = 1.0 / std::cos(alpha);
  const double csc = 1.0 / std::sin(alpha);
  return (1.0 + sec) / (1.0 + csc) / (2.0 * alpha);
}

Extrema gbar_minusT_extrema(double alpha) {
  require_alpha_range(alpha, "gbar_minusT_extrema");
  const double cot = std::cos(alpha) / std::sin(alpha);
  return {0.5 * (cot - 1.0), 0.5 * (cot + 1.0)};
}

Ordering midpoint_compare(double peak, const std::function<double(double)>&,
                          double g_a, double g_b) {
  const double mid = 0.5 * (g_a + g_b);
  if (std::fabs(g_a - peak) <= kEpsGeom || std::fabs(g_b - peak) <= kEpsGeom ||
      std::fabs(mid - peak) <= kEpsGeom)
    throw inconclusive_error(
        "midpoint_compare: an endpoint or the midpoint image coincides with the peak");
  if (std::fabs(g_a - g_b) <= kEpsGeom)
    throw inconclusive_error("midpoint_compare: g_a = g_b, no strict ordering");

  if (g_a < peak && g_b < peak)  // f increasing left of the peak
    return g_a < g_b ? Ordering::Less : Ordering::Greater;
  if (g_a > peak && g_b > peak)  // f decreasing right of the peak
    return g_a > g_b ? Ordering::Less : Ordering::Greater;
  if (g_a < peak)  // g_a < peak < g_b
    return mid < peak ? Ordering::Less : Ordering::Greater;
  // g_b < peak < g_a
  return mid > peak ? Ordering::Less : Ordering::Greater;
}

double solution_bound(double t, const ProblemSpec& spec, const QuadConfig& cfg,
                      int row_grid, int sup_grid) {
  const auto& bc = functional_bc(spec, "solution_bound");
  const KernelParams p = spec.kernel_params();
  require_periodic(p);
  const double T = p.T;

  const double gap = nonresonance_gap(bc.F, p, cfg);
  if (std::fabs(gap) <= spec.eps_gap)
    throw resonance_error("solution_bound: F(cos mt) = F(sin mt) within eps_gap");
  const double f_gbar_mT = gap / (2.0 * std::sin(p.alpha));

  constexpr double inflate = 1.0 + 1e-6;
  double sup_row = 0.0;
  for (int j = 0; j <= row_grid; ++j) {
    const double s = -T + 2.0 * T * j / row_grid;
    sup_row = std::max(sup_row, std::fabs(gbar(t, s, p)));
  }
  // both one-sided limits on the diagonals of this row
  for (double s : {t, -t}) {
    sup_row = std::max(sup_row, std::fabs(gbar(t, s, p, DiagSide::Lower)));
    sup_row = std::max(sup_row, std::fabs(gbar(t, s, p, DiagSide::Upper)));
  }
  sup_row *= inflate;

  double sup_all = 0.0;
  for (int i = 0; i <= sup_grid; ++i) {
    const double ti = -T + 2.0 * T * i / sup_grid;
    for (int j = 0; j <= sup_grid; ++j) {
      const double sj = -T + 2.0 * T * j / sup_grid;
      sup_all = std::max(sup_all, std::fabs(gbar(ti, sj, p)));
    }
  }
  sup_all *= inflate;

  const double tv = total_variation_bound(bc.F, T, cfg);
  const double h1 = h_norm1(spec, cfg);
  const double ratio = std::fabs(gbar_minus_T(t, p) / f_gbar_mT);
  return std::fabs(bc.c) * ratio + (sup_row + ratio * sup_all * tv) * h1;
}

PositivityReport certify_positive(const ProblemSpec& spec, const QuadConfig& cfg,
                                  int grid_n) {
  const auto& bc = functional_bc(spec, "certify_positive");
  if (grid_n < 2) throw domain_error("certify_positive: grid_n must be >= 2");
  const KernelParams p = spec.kernel_params();
  require_alpha_range(p.alpha, "certify_positive");

  const double gap = nonresonance_gap(bc.F, p, cfg);
  if (gap <= 0.0)
    throw orientation_error(
        "certify_positive: requires the orientation F(cos mt) > F(sin mt)");

  PositivityReport rep;
  rep.alpha = p.alpha;
  rep.M = kernel_sup(p.alpha);
  rep.tv_mu = total_variation_bound(bc.F, p.T, cfg);
  rep.h_norm1 = h_norm1(spec, cfg);
  rep.k1 = k1_constant(p.alpha, rep.tv_mu, rep.h_norm1);
  if (bc.F.is_lebesgue(p.T)) rep.k2 = k2_constant(p.alpha, rep.h_norm1, spec.m);

  ProblemSpec run = spec;
  run.quad = cfg;
  const Solution sol = solve_functional(run);
  double min_u = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid_n; ++i) {
    const double t = -p.T + 2.0 * p.T * i / grid_n;
    min_u = std::min(min_u, sol.evaluate(t));
  }
  rep.min_u_on_grid = min_u;

  rep.certified = (bc.c > *rep.k1) || (rep.k2.has_value() && bc.c > *rep.k2);
  if (rep.certified && !(min_u > 0.0))
    throw certification_error(
        "certify_positive: analytic certificate contradicted by grid minimum " +
        std::to_string(min_u));
  return rep;
}

double empirical_threshold(const ProblemSpec& spec, const QuadConfig& cfg,
                           int grid_n) {
  functional_bc(spec, "empirical_threshold");
  if (grid_n < 2) throw domain_error("empirical_threshold: grid_n must be >= 2");
  const KernelParams p = spec.kernel_params();

  ProblemSpec base = spec;
  base.quad = cfg;
  std::get<Functional>(base.bc).c = 0.0;
  const Solution sol0 = solve_functional(base);

  // u_c = u_0 + c w with w = Gbar(.,-T) / F(Gbar(.,-T)): the solution is
  // affine in c with a c-independent direction.
  const double gap = *sol0.diagnostics.gap;
  const double f_gbar_mT = gap / (2.0 * std::sin(p.alpha));
  const auto w = [p, f_gbar_mT](double t) { return gbar_minus_T(t, p) / f_gbar_mT; };

  const int n = grid_n;
  std::vector<double> ts(n + 1), u0(n + 1), wv(n + 1);
  for (int i = 0; i <= n; ++i) {
    ts[i] = -p.T + 2.0 * p.T * i / n;
    u0[i] = sol0.evaluate(ts[i]);
    wv[i] = w(ts[i]);
  }
  const auto u0_fn = [&sol0](double t) { return sol0.evaluate(t); };

  const auto min_of = [&](double c) {
    int arg = 0;
    double best = u0[0] + c * wv[0];
    for (int i = 1; i <= n; ++i) {
      const double v = u0[i] + c * wv[i];
      if (v < best) {
        best = v;
        arg = i;
      }
    }
    const double lo = ts[std::max(0, arg - 1)];
    const double hi = ts[std::min(n, arg + 1)];
    const double refined =
        golden_min([&](double t) { return u0_fn(t) + c * w(t); }, lo, hi);
    return std::min(best, refined);
  };

  double lo = -1e10, hi = 1e10;
  if (!(min_of(lo) < 0.0) || !(min_of(hi) >= 0.0))
    throw bracket_error(
        "empirical_threshold: no sign change of the grid minimum over the "
        "bracket [-1e10, 1e10]");
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (min_of(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace reflectode

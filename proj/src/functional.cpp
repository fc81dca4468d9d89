#include "reflectode/functional.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace reflectode {

Measure Measure::make(std::optional<Expr> density, std::vector<Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (std::fabs(atoms[i].t - atoms[j].t) <= kEpsGeom)
        throw domain_error("Measure: atom locations must be pairwise distinct");
  return Measure{std::move(density), std::move(atoms)};
}

bool Measure::is_lebesgue(double T) const {
  if (!atoms.empty() || !density.has_value()) return false;
  constexpr int n = 33;
  for (int i = 0; i <= n; ++i) {
    const double t = -T + 2.0 * T * i / n;
    double v;
    try {
      v = density->eval(t);
    } catch (const eval_error&) {
      return false;
    }
    if (std::fabs(v - 1.0) > 1e-14) return false;
  }
  return true;
}

namespace {

void check_atoms(const Measure& F, double T) {
  for (const Atom& a : F.atoms)
    if (std::fabs(a.t) > T + kEpsGeom)
      throw domain_error("Measure: atom at " + std::to_string(a.t) +
                         " outside [-T, T]");
}

}  // namespace

double apply(const Measure& F, const std::function<double(double)>& x, double T,
             const QuadConfig& cfg, const std::vector<double>& breakpoints) {
  check_atoms(F, T);
  double r = 0.0;
  if (F.density.has_value()) {
    const Expr w = *F.density;
    r += integrate([&](double t) { return x(t) * w.eval(t); }, -T, T, breakpoints, cfg);
  }
  for (const Atom& a : F.atoms) r += a.a * x(std::clamp(a.t, -T, T));
  return r;
}

double total_variation_bound(const Measure& F, double T, const QuadConfig& cfg) {
  check_atoms(F, T);
  double r = 0.0;
  if (F.density.has_value()) {
    const Expr w = *F.density;
    r += integrate([&](double t) { return std::fabs(w.eval(t)); }, -T, T, {}, cfg);
  }
  for (const Atom& a : F.atoms) r += std::fabs(a.a);
  return r;
}

double nonresonance_gap(const Measure& F, const KernelParams& p,
                        const QuadConfig& cfg) {
  const double m = p.m;
  const double fc = apply(F, [m](double t) { return std::cos(m * t); }, p.T, cfg);
  const double fs = apply(F, [m](double t) { return std::sin(m * t); }, p.T, cfg);
  return fc - fs;
}

}  // namespace reflectode

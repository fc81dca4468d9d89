#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reflectode/expr.hpp"
#include "reflectode/kernel.hpp"
#include "reflectode/quad.hpp"

namespace reflectode {

// Point mass a at location t.
struct Atom {
  double t;
  double a;
};

// Linear functional F(x) = integral of x * density over I plus sum of
// a_i * x(t_i). This absolutely-continuous-plus-atoms class represents every
// functional the JSON schema can state; the density may be absent.
struct Measure {
  std::optional<Expr> density;
  std::vector<Atom> atoms;

  // Atom locations must be pairwise distinct (within kEpsGeom).
  static Measure make(std::optional<Expr> density, std::vector<Atom> atoms);

  // True when the measure is exactly Lebesgue measure on I: a density that is
  // constantly 1 (checked on a fixed sample) and no atoms. The k2 positivity
  // constant applies only to this case.
  bool is_lebesgue(double T) const;
};

// F(x) over I = [-T, T]. Atom locations are validated against I here, since
// the measure itself carries no interval.
double apply(const Measure& F, const std::function<double(double)>& x, double T,
             const QuadConfig& cfg = {}, const std::vector<double>& breakpoints = {});

// Upper bound on the total variation |mu|(I): integral of |density| plus the
// sum of |a_i| (equality for this representation class).
double total_variation_bound(const Measure& F, double T, const QuadConfig& cfg = {});

// F(cos m.) - F(sin m.). The functional problem is uniquely solvable when this
// is nonzero; the solver requires |gap| > eps_gap.
double nonresonance_gap(const Measure& F, const KernelParams& p,
                        const QuadConfig& cfg = {});

inline constexpr double kEpsGap = 1e-9;

}  // namespace reflectode

#include "reflectode/verify.hpp"

#include <algorithm>
#include <cmath>

namespace reflectode {
namespace {

constexpr double kFdStep1 = 1e-5;  // first derivatives
constexpr double kFdStep2 = 1e-4;  // second derivatives

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

bool near_diag(double t, double s) {
  return std::fabs(t - s) <= 1e-9 || std::fabs(t + s) <= 1e-9;
}

// --- internal periodic harmonic-oscillator kernel candidate ------------------
//
// G(t,s) = cos(m(|t-s| - T)) / (2 m sin(mT)) solves x'' + m^2 x = 0 off the
// diagonal with x(-T) = x(T), x'(-T) = x'(T). It is not public API: it is
// trusted only after passing its own axioms at runtime, and the suite then
// checks Gbar = m G(t,-s) - dG/ds by finite differences. If the candidate
// fails its axioms the cross-check is reported as skipped, not failed.

double osc_g(double t, double s, double m, double T) {
  return std::cos(m * (std::fabs(t - s) - T)) / (2.0 * m * std::sin(m * T));
}

double osc_g_dt(double t, double s, double m, double T, bool lower) {
  const double sgn = (std::fabs(t - s) <= kEpsGeom) ? (lower ? 1.0 : -1.0)
                                                    : (s < t ? 1.0 : -1.0);
  return -sgn * std::sin(m * (std::fabs(t - s) - T)) / (2.0 * std::sin(m * T));
}

// Jump, symmetry, ODE, and periodic boundary axioms of the candidate.
bool validate_candidate(double m, double T, double& max_err) {
  max_err = 0.0;
  const auto ts = linspace(-T, T, 21);

  for (double t : ts) {
    if (std::fabs(t) > T - 1e-6) continue;
    const double jump = osc_g_dt(t, t, m, T, true) - osc_g_dt(t, t, m, T, false);
    max_err = std::max(max_err, std::fabs(jump - 1.0));
  }
  for (double t : ts)
    for (double s : ts) {
      max_err = std::max(max_err,
                         std::fabs(osc_g(t, s, m, T) - osc_g(s, t, m, T)));
      if (near_diag(t, s) || std::fabs(t) > T - 2 * kFdStep2) continue;
      const double d2 = (osc_g(t + kFdStep2, s, m, T) - 2.0 * osc_g(t, s, m, T) +
                         osc_g(t - kFdStep2, s, m, T)) /
                        (kFdStep2 * kFdStep2);
      max_err = std::max(max_err, std::fabs(d2 + m * m * osc_g(t, s, m, T)));
    }
  for (double s : ts) {
    if (std::fabs(s) > T - 1e-6) continue;
    max_err = std::max(max_err,
                       std::fabs(osc_g(T, s, m, T) - osc_g(-T, s, m, T)));
    max_err = std::max(max_err, std::fabs(osc_g_dt(T, s, m, T, true) -
                                          osc_g_dt(-T, s, m, T, false)));
  }
  return max_err <= 1e-4;
}

void periodic_suite(VerifyReport& rep, const KernelParams& p) {
  const double T = p.T;
  const auto ts = linspace(-T, T, 21);
  const auto interior = linspace(-0.95 * T, 0.95 * T, 21);

  {  // jump across s = t (one-sided closed-form limits)
    double e = 0.0;
    for (double t : ts) {
      const double j =
          gbar(t, t, p, DiagSide::Lower) - gbar(t, t, p, DiagSide::Upper);
      e = std::max(e, std::fabs(j - 1.0));
    }
    rep.add("gbar jump Gbar(t,t-)-Gbar(t,t+) = 1", e, 1e-8);
  }
  {  // symmetry Gbar(t,s) = Gbar(-s,-t)
    double e = 0.0;
    for (double t : ts)
      for (double s : ts) {
        if (near_diag(t, s)) continue;
        e = std::max(e, std::fabs(gbar(t, s, p) - gbar(-s, -t, p)));
      }
    rep.add("gbar symmetry Gbar(t,s) = Gbar(-s,-t)", e, 1e-8);
  }
  {  // boundary row agrees with its closed form on a 101-point grid
    double e = 0.0;
    for (double t : linspace(-T, T, 101))
      e = std::max(e, std::fabs(gbar(t, -T, p) - gbar_minus_T(t, p)));
    rep.add("gbar(t,-T) = (cos mt - sin mt)/(2 sin a)", e, 1e-10);
  }
  {  // row integral over t equals 1/m for sampled s
    double e = 0.0;
    for (double s : interior) {
      const double as = std::fabs(s);
      const double row = integrate([&](double t) { return gbar(t, s, p); }, -T, T,
                                   {-as, as});
      e = std::max(e, std::fabs(row - 1.0 / p.m));
    }
    rep.add("row integral of Gbar(.,s) over t = 1/m", e, 1e-6);
  }
  {  // optional cross-check against the oscillator candidate
    double cand_err = 0.0;
    if (validate_candidate(p.m, T, cand_err)) {
      rep.add("oscillator candidate axioms (jump, symmetry, ODE, boundary)",
              cand_err, 1e-4);
      double e = 0.0;
      for (double t : interior)
        for (double s : interior) {
          if (near_diag(t, s)) continue;
          const double dgds = (osc_g(t, s + kFdStep1, p.m, T) -
                               osc_g(t, s - kFdStep1, p.m, T)) /
                              (2.0 * kFdStep1);
          const double built = p.m * osc_g(t, -s, p.m, T) - dgds;
          e = std::max(e, std::fabs(built - gbar(t, s, p)));
        }
      rep.add("Gbar = m G(t,-s) - dG/ds (oscillator candidate, FD)", e, 1e-5);
    } else {
      rep.add("Gbar = m G(t,-s) - dG/ds [skipped: candidate failed axioms]", 0.0,
              1e-5);
    }
  }
}

void antiperiodic_suite(VerifyReport& rep, const KernelParams& p) {
  const double T = p.T;
  const double m = p.m;
  const auto ts = linspace(-T, T, 21);
  const auto interior = linspace(-0.95 * T, 0.95 * T, 21);

  {  // (A1) continuity of H across s = t: both branches coincide
    double e = 0.0;
    for (double t : ts) {
      const double diag = h_kernel(t, t, p);
      const double expect = -std::tan(p.alpha) / (2.0 * m);
      e = std::max(e, std::fabs(diag - expect));
    }
    rep.add("(A1) H continuous across s=t (H(t,t) = -tan(a)/(2m))", e, 1e-12);
  }
  {  // (A2) dH/dt and d2H/dt2 exist off the diagonal: two-scale FD agreement
    double e = 0.0;
    for (double t : interior)
      for (double s : interior) {
        if (near_diag(t, s)) continue;
        if (std::min(std::fabs(t - s), std::fabs(t + s)) < 4 * kFdStep2) continue;
        const double d1a = (h_kernel(t + kFdStep2, s, p) - h_kernel(t - kFdStep2, s, p)) /
                           (2.0 * kFdStep2);
        const double d1b = (h_kernel(t + kFdStep2 / 2, s, p) -
                            h_kernel(t - kFdStep2 / 2, s, p)) /
                           kFdStep2;
        e = std::max(e, std::fabs(d1a - d1b));
      }
    rep.add("(A2) dH/dt exists off diagonal (two-scale FD)", e, 1e-5);
  }
  {  // (A3) jump of dH/dt across s = t
    double e = 0.0;
    for (double t : ts) {
      const double j = h_kernel_dt(t, t, p, DiagSide::Lower) -
                       h_kernel_dt(t, t, p, DiagSide::Upper);
      e = std::max(e, std::fabs(j - 1.0));
    }
    rep.add("(A3) dH/dt(t,t-) - dH/dt(t,t+) = 1", e, 1e-8);
  }
  {  // (A4) d2H/dt2 + m^2 H = 0 off the diagonal
    double e = 0.0;
    for (double t : interior)
      for (double s : interior) {
        if (std::min(std::fabs(t - s), std::fabs(t + s)) < 4 * kFdStep2) continue;
        const double d2 = (h_kernel(t + kFdStep2, s, p) - 2.0 * h_kernel(t, s, p) +
                           h_kernel(t - kFdStep2, s, p)) /
                          (kFdStep2 * kFdStep2);
        e = std::max(e, std::fabs(d2 + m * m * h_kernel(t, s, p)));
      }
    rep.add("(A4) d2H/dt2 + m^2 H = 0 (FD)", e, 1e-4);
  }
  {  // (A5a/b) antiperiodic boundary of H and dH/dt; the derivative identity
     // is sampled away from the corners, which lie on the excluded diagonal D
    double ea = 0.0, eb = 0.0;
    for (double s : ts)
      ea = std::max(ea, std::fabs(h_kernel(T, s, p) + h_kernel(-T, s, p)));
    for (double s : interior)
      eb = std::max(eb, std::fabs(h_kernel_dt(T, s, p) + h_kernel_dt(-T, s, p)));
    rep.add("(A5a) H(T,s) + H(-T,s) = 0", ea, 1e-8);
    rep.add("(A5b) dH/dt(T,s) + dH/dt(-T,s) = 0", eb, 1e-8);
  }
  {  // (A6)-(A10) closed-form branch identities
    double e6 = 0.0, e7 = 0.0, e8 = 0.0, e9 = 0.0, e10 = 0.0;
    for (double t : ts)
      for (double s : ts) {
        if (near_diag(t, s)) continue;
        e6 = std::max(e6, std::fabs(h_kernel(t, s, p) - h_kernel(s, t, p)));
        e7 = std::max(e7, std::fabs(h_kernel(t, s, p) - h_kernel(-t, -s, p)));
        e8 = std::max(e8, std::fabs(h_kernel_dt(t, s, p) - h_kernel_ds(s, t, p)));
        e9 = std::max(e9, std::fabs(h_kernel_dt(t, s, p) + h_kernel_dt(-t, -s, p)));
        e10 = std::max(e10, std::fabs(h_kernel_dt(t, s, p) + h_kernel_ds(t, s, p)));
      }
    rep.add("(A6) H(t,s) = H(s,t)", e6, 1e-6);
    rep.add("(A7) H(t,s) = H(-t,-s)", e7, 1e-6);
    rep.add("(A8) dH/dt(t,s) = dH/ds(s,t)", e8, 1e-6);
    rep.add("(A9) dH/dt(t,s) = -dH/dt(-t,-s)", e9, 1e-6);
    rep.add("(A10) dH/dt(t,s) = -dH/ds(t,s)", e10, 1e-6);
  }
  {  // (A'1) dHbar/dt exists off both diagonals: two-scale FD agreement
    double e = 0.0;
    for (double t : interior)
      for (double s : interior) {
        if (std::min(std::fabs(t - s), std::fabs(t + s)) < 4 * kFdStep2) continue;
        const double d1a = (hbar(t + kFdStep2, s, p) - hbar(t - kFdStep2, s, p)) /
                           (2.0 * kFdStep2);
        const double d1b =
            (hbar(t + kFdStep2 / 2, s, p) - hbar(t - kFdStep2 / 2, s, p)) / kFdStep2;
        e = std::max(e, std::fabs(d1a - d1b));
      }
    rep.add("(A'1) dHbar/dt exists off diagonals (two-scale FD)", e, 1e-5);
  }
  {  // (A'2) jump of Hbar across s = t
    double e = 0.0;
    for (double t : ts) {
      const double j =
          hbar(t, t, p, DiagSide::Lower) - hbar(t, t, p, DiagSide::Upper);
      e = std::max(e, std::fabs(j - 1.0));
    }
    rep.add("(A'2) Hbar(t,t-) - Hbar(t,t+) = 1", e, 1e-8);
  }
  {  // (A'3) dHbar/dt + m Hbar(-t,s) = 0 off the diagonals
    double e = 0.0;
    for (double t : interior)
      for (double s : interior) {
        if (std::min(std::fabs(t - s), std::fabs(t + s)) < 4 * kFdStep1) continue;
        const double d1 =
            (hbar(t + kFdStep1, s, p) - hbar(t - kFdStep1, s, p)) / (2.0 * kFdStep1);
        e = std::max(e, std::fabs(d1 + m * hbar(-t, s, p)));
      }
    rep.add("(A'3) dHbar/dt + m Hbar(-t,s) = 0 (FD)", e, 1e-4);
  }
  {  // (A'4) antiperiodic boundary of Hbar, s interior
    double e = 0.0;
    for (double s : interior)
      e = std::max(e, std::fabs(hbar(T, s, p) + hbar(-T, s, p)));
    rep.add("(A'4) Hbar(T,s) + Hbar(-T,s) = 0", e, 1e-8);
  }
  {  // (A'5) Hbar(t,s) = Hbar(-s,-t)
    double e = 0.0;
    for (double t : ts)
      for (double s : ts) {
        if (near_diag(t, s)) continue;
        e = std::max(e, std::fabs(hbar(t, s, p) - hbar(-s, -t, p)));
      }
    rep.add("(A'5) Hbar(t,s) = Hbar(-s,-t)", e, 1e-8);
  }
  {  // sign change: Hbar(.,s) attains both signs for each sampled s
    int failures = 0;
    for (double s : linspace(-0.99 * T, 0.99 * T, 101)) {
      bool pos = false, neg = false;
      for (double t : linspace(-T, T, 201)) {
        const double v = hbar(t, s, p);
        pos = pos || v > 0.0;
        neg = neg || v < 0.0;
      }
      if (!(pos && neg)) ++failures;
    }
    rep.add("Hbar(.,s) attains both signs on I", static_cast<double>(failures), 0.0);
  }
}

}  // namespace

double residual(const std::function<double(double)>& u,
                const std::function<double(double)>& h, double m, double T,
                int grid_n) {
  if (grid_n < 2) throw domain_error("residual: grid_n must be >= 2");
  const double d = kFdStep1;
  double worst = 0.0;
  for (int i = 0; i <= grid_n; ++i) {
    const double t = -T + 2.0 * T * i / grid_n;
    double du;
    if (t - d < -T)
      du = (-3.0 * u(t) + 4.0 * u(t + d) - u(t + 2.0 * d)) / (2.0 * d);
    else if (t + d > T)
      du = (3.0 * u(t) - 4.0 * u(t - d) + u(t - 2.0 * d)) / (2.0 * d);
    else
      du = (u(t + d) - u(t - d)) / (2.0 * d);
    worst = std::max(worst, std::fabs(du + m * u(-t) - h(t)));
  }
  return worst;
}

double boundary_residual(const std::function<double(double)>& u,
                         const BoundaryCondition& bc, double T,
                         const QuadConfig& cfg) {
  if (std::holds_alternative<Periodic>(bc)) return std::fabs(u(-T) - u(T));
  if (std::holds_alternative<Antiperiodic>(bc)) return std::fabs(u(-T) + u(T));
  if (const auto* l = std::get_if<Lambda>(&bc))
    return std::fabs(u(-T) - u(T) - l->lambda);
  const auto& f = std::get<Functional>(bc);
  return std::fabs(apply(f.F, u, T, cfg) - f.c);
}

VerifyReport kernel_axiom_suite(KernelKind kind, const KernelParams& p) {
  VerifyReport rep;
  if (kind == KernelKind::Periodic) {
    require_periodic(p);
    if (std::fabs(p.m) <= kEpsM)
      throw domain_error("kernel_axiom_suite: periodic suite requires m != 0");
    periodic_suite(rep, p);
  } else {
    require_antiperiodic(p);
    if (std::fabs(p.m) <= kEpsM)
      throw domain_error("kernel_axiom_suite: antiperiodic suite requires m != 0");
    antiperiodic_suite(rep, p);
  }
  return rep;
}

double manufactured_check(const Expr& v, const BoundaryCondition& bc, double m,
                          double T, const QuadConfig& cfg) {
  const auto vf = [&v](double t) { return v.eval(t); };
  const double bres = boundary_residual(vf, bc, T, cfg);
  if (bres > 1e-9)
    throw bc_violation_error(
        "manufactured_check: v violates its boundary condition (residual " +
        std::to_string(bres) + ")");

  const double d = kFdStep1;
  const auto h = [vf, m, d](double t) {
    return (vf(t + d) - vf(t - d)) / (2.0 * d) + m * vf(-t);
  };
  const Solution sol = solve(m, T, h, bc, cfg);

  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = -T + 2.0 * T * i / 200;
    worst = std::max(worst, std::fabs(sol.evaluate(t) - vf(t)));
  }
  return worst;
}

}  // namespace reflectode

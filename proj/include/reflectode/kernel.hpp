#pragma once

#include "reflectode/errors.hpp"

namespace reflectode {

// Geometric tolerance for diagonal detection and midpoint comparisons.
inline constexpr double kEpsGeom = 1e-12;
// Degenerate-m guard for the antiperiodic oscillator kernel H (divides by m).
inline constexpr double kEpsM = 1e-12;

// Equation coefficient m and half-length T of I = [-T,T]; alpha = m*T is the
// single dimensionless parameter the scaled kernels depend on.
//
// The resonance guard protects |sin(alpha)| for the periodic-family kernels
// (m != k*pi/T) and |cos(alpha)| for the antiperiodic ones (m != (k+1/2)*pi/T);
// each evaluation checks the guard its own closed form actually needs.
struct KernelParams {
  double m;
  double T;
  double alpha;
  double eps_res;

  KernelParams(double m_, double T_, double eps_res_ = 1e-9);
};

// The four open regions of the unit square cut by the diagonals z = +-y,
// plus DIAG for points within kEpsGeom of either diagonal.
enum class Region { Above, Right, Below, Left, Diag };

// Which one-sided limit a kernel returns when evaluated on a diagonal:
// Lower = limit from s < t on z = y and from s < -t on z = -y (the default),
// Upper = the opposite side.
enum class DiagSide { Lower, Upper };

// Region of (z,y) in [-1,1]^2: Above z>|y|, Right |z|<y, Below -|z|>y,
// Left z<-|y|, Diag within kEpsGeom of z = +-y. Throws domain_error outside
// the square.
Region classify_region(double z, double y);

// Throw resonance_error when the respective kernel family does not exist.
void require_periodic(const KernelParams& p);
void require_antiperiodic(const KernelParams& p);

// Periodic reflection kernel Gbar(t,s) from its explicit four-case form in
// scaled coordinates z = t/T, y = s/T. On a diagonal returns the one-sided
// limit selected by `side`. Requires |sin(alpha)| > eps_res.
double gbar(double t, double s, const KernelParams& p,
            DiagSide side = DiagSide::Lower);

// Boundary row Gbar(t,-T) = (cos(m t) - sin(m t)) / (2 sin(alpha)); the unique
// solution of x'(t) + m x(-t) = 0 with x(-T) - x(T) = 1.
double gbar_minus_T(double t, const KernelParams& p);

// Antiperiodic harmonic-oscillator kernel H(t,s); continuous across s = t.
// Requires |cos(alpha)| > eps_res and |m| > kEpsM.
double h_kernel(double t, double s, const KernelParams& p);

// Closed-form derivative branches of H; on the s = t diagonal they return the
// one-sided limit selected by `side`.
double h_kernel_dt(double t, double s, const KernelParams& p,
                   DiagSide side = DiagSide::Lower);
double h_kernel_ds(double t, double s, const KernelParams& p,
                   DiagSide side = DiagSide::Lower);

// Antiperiodic reflection kernel Hbar(t,s) from its explicit four-case form.
// Finite at m = 0 (unlike H). Requires |cos(alpha)| > eps_res.
double hbar(double t, double s, const KernelParams& p,
            DiagSide side = DiagSide::Lower);

// Phi(y) = max over z of Gbar(z,y) in scaled coordinates, alpha in (0, pi/4).
// Symmetric in y; peaks at y = 1/2.
double phi_profile(double y, double alpha);

// M = sup of Gbar over I^2 = (1 + csc(alpha))/2 for alpha in (0, pi/4),
// attained on the diagonal at scaled coordinate 1/2.
double kernel_sup(double alpha);

}  // namespace reflectode

#include "reflectode/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace reflectode {
namespace {

constexpr double kPi4 = 0.785398163397448309615660845819876;  // pi/4

double to_scaled(double v, double T, const char* what) {
  const double x = v / T;
  if (std::fabs(x) > 1.0 + kEpsGeom)
    throw domain_error(std::string(what) + " outside [-T, T]");
  return std::clamp(x, -1.0, 1.0);
}

// Open-region value of sin(alpha) * Gbar(z, y).
double gbar_region(Region r, double z, double y, double a) {
  switch (r) {
    case Region::Above:
      return std::cos(a * (1.0 - z) - kPi4) * std::cos(a * y - kPi4);
    case Region::Right:
      return std::cos(a * z + kPi4) * std::cos(a * (y - 1.0) - kPi4);
    case Region::Below:
      return std::cos(a * z + kPi4) * std::cos(a * (1.0 + y) - kPi4);
    case Region::Left:
      return std::cos(a * (z + 1.0) + kPi4) * std::cos(a * y - kPi4);
    case Region::Diag:
      break;
  }
  throw domain_error("gbar_region: unresolved diagonal");
}

// Open-region value of 2 cos(alpha) * Hbar(z, y).
double hbar_region(Region r, double z, double y, double a) {
  switch (r) {
    case Region::Above:
      return std::sin(a * (z + y - 1.0)) + std::cos(a * (z - y - 1.0));
    case Region::Right:
      return std::sin(a * (z + y - 1.0)) - std::cos(a * (y - z - 1.0));
    case Region::Below:
      return std::sin(a * (-z - y - 1.0)) + std::cos(a * (z - y - 1.0));
    case Region::Left:
      return std::sin(a * (-z - y - 1.0)) - std::cos(a * (y - z - 1.0));
    case Region::Diag:
      break;
  }
  throw domain_error("hbar_region: unresolved diagonal");
}

// Replace Diag by the open region whose one-sided limit the side flag selects.
Region resolve_diag(double z, double y, DiagSide side) {
  const bool on_main = std::fabs(z - y) <= kEpsGeom;  // s = t
  if (on_main) {
    if (side == DiagSide::Lower) return z > 0.0 ? Region::Above : Region::Below;
    return z >= 0.0 ? Region::Right : Region::Left;
  }
  // s = -t
  if (side == DiagSide::Lower) return z < 0.0 ? Region::Left : Region::Below;
  return z < 0.0 ? Region::Right : Region::Above;
}

Region region_for(double z, double y, DiagSide side) {
  Region r = classify_region(z, y);
  if (r == Region::Diag) r = resolve_diag(z, y, side);
  return r;
}

}  // namespace

KernelParams::KernelParams(double m_, double T_, double eps_res_)
    : m(m_), T(T_), alpha(m_ * T_), eps_res(eps_res_) {
  if (!(T > 0.0)) throw domain_error("KernelParams: T must be positive");
  if (!(eps_res > 0.0)) throw domain_error("KernelParams: eps_res must be positive");
}

void require_periodic(const KernelParams& p) {
  if (std::fabs(std::sin(p.alpha)) <= p.eps_res)
    throw resonance_error("periodic kernel resonance: |sin(m T)| <= " +
                          std::to_string(p.eps_res) + " (m = k pi / T)");
}

void require_antiperiodic(const KernelParams& p) {
  if (std::fabs(std::cos(p.alpha)) <= p.eps_res)
    throw resonance_error("antiperiodic kernel resonance: |cos(m T)| <= " +
                          std::to_string(p.eps_res) + " (m = (k + 1/2) pi / T)");
}

Region classify_region(double z, double y) {
  if (std::fabs(z) > 1.0 + kEpsGeom || std::fabs(y) > 1.0 + kEpsGeom)
    throw domain_error("classify_region: point outside [-1,1]^2");
  if (std::fabs(z - y) <= kEpsGeom || std::fabs(z + y) <= kEpsGeom) return Region::Diag;
  if (z > std::fabs(y)) return Region::Above;
  if (std::fabs(z) < y) return Region::Right;
  if (-std::fabs(z) > y) return Region::Below;
  return Region::Left;
}

double gbar(double t, double s, const KernelParams& p, DiagSide side) {
  require_periodic(p);
  const double z = to_scaled(t, p.T, "gbar: t");
  const double y = to_scaled(s, p.T, "gbar: s");
  return gbar_region(region_for(z, y, side), z, y, p.alpha) / std::sin(p.alpha);
}

double gbar_minus_T(double t, const KernelParams& p) {
  require_periodic(p);
  to_scaled(t, p.T, "gbar_minus_T: t");
  return (std::cos(p.m * t) - std::sin(p.m * t)) / (2.0 * std::sin(p.alpha));
}

double h_kernel(double t, double s, const KernelParams& p) {
  require_antiperiodic(p);
  if (std::fabs(p.m) <= kEpsM)
    throw domain_error("h_kernel: degenerate m (closed form divides by m)");
  const double z = to_scaled(t, p.T, "h_kernel: t");
  const double y = to_scaled(s, p.T, "h_kernel: s");
  const double a = p.alpha;
  const double num = (y <= z) ? std::sin(a * (z - y - 1.0)) : std::sin(a * (y - z - 1.0));
  return num / (2.0 * p.m * std::cos(a));
}

double h_kernel_dt(double t, double s, const KernelParams& p, DiagSide side) {
  require_antiperiodic(p);
  const double z = to_scaled(t, p.T, "h_kernel_dt: t");
  const double y = to_scaled(s, p.T, "h_kernel_dt: s");
  const double a = p.alpha;
  const bool lower =
      std::fabs(y - z) <= kEpsGeom ? (side == DiagSide::Lower) : (y < z);
  const double num =
      lower ? std::cos(a * (z - y - 1.0)) : -std::cos(a * (y - z - 1.0));
  return num / (2.0 * std::cos(a));
}

double h_kernel_ds(double t, double s, const KernelParams& p, DiagSide side) {
  return -h_kernel_dt(t, s, p, side);
}

double hbar(double t, double s, const KernelParams& p, DiagSide side) {
  require_antiperiodic(p);
  const double z = to_scaled(t, p.T, "hbar: t");
  const double y = to_scaled(s, p.T, "hbar: s");
  return hbar_region(region_for(z, y, side), z, y, p.alpha) /
         (2.0 * std::cos(p.alpha));
}

double phi_profile(double y, double alpha) {
  if (!(alpha > 0.0) || !(alpha < kPi4))
    throw domain_error("phi_profile: alpha must lie in (0, pi/4)");
  if (std::fabs(y) > 1.0 + kEpsGeom)
    throw domain_error("phi_profile: |y| > 1");
  y = std::clamp(y, -1.0, 1.0);
  const double a = alpha;
  const double num = (y >= 0.0)
                         ? std::cos(a * (y - 1.0) + kPi4) * std::cos(a * y - kPi4)
                         : std::cos(a * y + kPi4) * std::cos(a * (y + 1.0) - kPi4);
  return num / std::sin(a);
}

double kernel_sup(double alpha) {
  if (!(alpha > 0.0) || !(alpha < kPi4))
    throw domain_error("kernel_sup: alpha must lie in (0, pi/4)");
  return 0.5 * (1.0 + 1.0 / std::sin(alpha));
}

}  // namespace reflectode

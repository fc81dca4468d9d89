#include <cmath>

#include <doctest.h>

#include "reflectode/verify.hpp"

using namespace reflectode;

TEST_CASE("residual of an exact solution is at the finite-difference floor") {
  const auto u = [](double t) { return std::cosh(t); };
  const auto h = [](double t) { return std::exp(t); };
  CHECK(residual(u, h, 1.0, 0.5) < 1e-6);
}

TEST_CASE("residual of the zero solution is zero") {
  const auto zero = [](double) { return 0.0; };
  CHECK(residual(zero, zero, 1.0, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("homogeneous family has vanishing residual") {
  const double m = 1.7;
  const auto u = [m](double t) { return std::cos(m * t) - std::sin(m * t); };
  const auto h = [](double) { return 0.0; };
  CHECK(residual(u, h, m, 0.6) < 1e-6);
}

TEST_CASE("boundary residuals per family") {
  const auto cosh_fn = [](double t) { return std::cosh(t); };
  CHECK(boundary_residual(cosh_fn, Periodic{}, 0.5) == doctest::Approx(0.0));

  const auto sin_pi = [](double t) { return std::sin(M_PI * t); };
  CHECK(boundary_residual(sin_pi, Antiperiodic{}, 0.5) == doctest::Approx(0.0));

  const KernelParams p(1.0, 0.5);
  const auto row = [&p](double t) { return gbar_minus_T(t, p); };
  CHECK(boundary_residual(row, Lambda{1.0}, 0.5) < 1e-8);

  const Measure leb = Measure::make(Expr::parse("1"), {});
  const auto one = [](double) { return 1.0; };
  CHECK(boundary_residual(one, Functional{leb, 1.0}, 0.5) < 1e-10);
}

TEST_CASE("kernel axiom suites pass for non-resonant parameters") {
  for (auto [m, T] : {std::pair{0.2, 0.5}, {1.0, 0.5}, {1.0, 1.0}}) {
    const KernelParams p(m, T);
    const VerifyReport anti = kernel_axiom_suite(KernelKind::Antiperiodic, p);
    CHECK(anti.all_passed());
    const VerifyReport per = kernel_axiom_suite(KernelKind::Periodic, p);
    CHECK(per.all_passed());
  }
}

TEST_CASE("periodic suite contains the row-integral check") {
  const VerifyReport rep =
      kernel_axiom_suite(KernelKind::Periodic, KernelParams(1.0, 0.5));
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name.find("row integral") != std::string::npos) found = c.passed;
  CHECK(found);
}

TEST_CASE("periodic suite includes the oscillator cross-check, not skipped") {
  const VerifyReport rep =
      kernel_axiom_suite(KernelKind::Periodic, KernelParams(1.0, 0.5));
  bool crosscheck = false;
  for (const auto& c : rep.checks)
    if (c.name.find("m G(t,-s) - dG/ds") != std::string::npos &&
        c.name.find("skipped") == std::string::npos)
      crosscheck = c.passed;
  CHECK(crosscheck);
}

TEST_CASE("suite rejects resonant parameters via the guard") {
  // a configurable guard turns near-resonance into an error before any check
  const KernelParams near_pi(3.1, 1.0, 0.05);  // |sin(3.1)| = 0.0416 < 0.05
  CHECK_THROWS_AS(kernel_axiom_suite(KernelKind::Periodic, near_pi),
                  resonance_error);
  const KernelParams at_res(M_PI, 1.0);
  CHECK_THROWS_AS(kernel_axiom_suite(KernelKind::Periodic, at_res),
                  resonance_error);
  CHECK_THROWS_AS(kernel_axiom_suite(KernelKind::Antiperiodic, KernelParams(M_PI, 0.5)),
                  resonance_error);
}

TEST_CASE("antiperiodic suite reports the sign-change check") {
  const VerifyReport rep =
      kernel_axiom_suite(KernelKind::Antiperiodic, KernelParams(1.0, 0.5));
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name.find("both signs") != std::string::npos) found = c.passed;
  CHECK(found);
}

TEST_CASE("manufactured periodic cosh") {
  const double err = manufactured_check(Expr::parse("cosh(t)"), Periodic{}, 1.0, 0.5);
  CHECK(err < 1e-6);
}

TEST_CASE("manufactured antiperiodic sine") {
  const double err =
      manufactured_check(Expr::parse("sin(pi*t)"), Antiperiodic{}, 1.0, 0.5);
  CHECK(err < 1e-6);
}

TEST_CASE("manufactured homogeneous family under a jump condition") {
  // v = cos t - sin t solves the homogeneous equation; its jump is 2 sin(1/2)
  const double lambda = 2.0 * std::sin(0.5);
  const double err =
      manufactured_check(Expr::parse("cos(t) - sin(t)"), Lambda{lambda}, 1.0, 0.5);
  CHECK(err < 1e-6);
}

TEST_CASE("manufactured zero solution") {
  const double err = manufactured_check(Expr::parse("0"), Periodic{}, 1.0, 0.5);
  CHECK(err == doctest::Approx(0.0));
}

TEST_CASE("manufactured check rejects boundary violations") {
  CHECK_THROWS_AS(manufactured_check(Expr::parse("cosh(t)"), Antiperiodic{}, 1.0, 0.5),
                  bc_violation_error);
  CHECK_THROWS_AS(manufactured_check(Expr::parse("t"), Periodic{}, 1.0, 0.5),
                  bc_violation_error);
}

#include <cmath>

#include <doctest.h>

#include "reflectode/kernel.hpp"
#include "reflectode/quad.hpp"
#include "test_rng.hpp"

using namespace reflectode;

TEST_CASE("cosine over a half period") {
  const double v = integrate([](double x) { return std::cos(x); }, -M_PI_2, M_PI_2);
  CHECK(std::fabs(v - 2.0) < 1e-10);
}

TEST_CASE("kink split at the breakpoint") {
  const double v = integrate([](double x) { return std::fabs(x); }, -1.0, 1.0, {0.0});
  CHECK(std::fabs(v - 1.0) < 1e-12);
}

TEST_CASE("kernel row integral equals the constant-forcing solution") {
  // Xi(1)(t) solves x' + m x(-t) = 1 with periodic boundary, whose unique
  // solution is the constant 1/m.
  const KernelParams p(1.0, 0.5);
  const double t = 0.25;
  const double v = integrate([&](double s) { return gbar(t, s, p); }, -0.5, 0.5,
                             {-t, t});
  CHECK(std::fabs(v - 1.0) < 1e-8);
}

TEST_CASE("degree-5 polynomials are integrated exactly") {
  const auto poly = [](double x) {
    return 1.0 + 2.0 * x - 3.0 * x * x + 0.5 * x * x * x - std::pow(x, 4) +
           0.25 * std::pow(x, 5);
  };
  const auto anti = [](double x) {
    return x + x * x - x * x * x + 0.125 * std::pow(x, 4) - 0.2 * std::pow(x, 5) +
           0.25 / 6.0 * std::pow(x, 6);
  };
  const double v = integrate(poly, -1.0, 2.0);
  CHECK(std::fabs(v - (anti(2.0) - anti(-1.0))) < 1e-13);
}

TEST_CASE("linearity on random polynomials") {
  TestRng rng(7771);
  for (int k = 0; k < 20; ++k) {
    const double c0 = rng.uniform(-2, 2), c1 = rng.uniform(-2, 2),
                 c2 = rng.uniform(-2, 2);
    const double d0 = rng.uniform(-2, 2), d1 = rng.uniform(-2, 2),
                 d2 = rng.uniform(-2, 2);
    const double a = rng.uniform(-1, 0), b = rng.uniform(0.5, 2);
    const auto f = [&](double x) { return c0 + c1 * x + c2 * x * x; };
    const auto g = [&](double x) { return d0 + d1 * x + d2 * x * x; };
    const double al = rng.uniform(-3, 3), be = rng.uniform(-3, 3);
    const double lhs =
        integrate([&](double x) { return al * f(x) + be * g(x); }, a, b);
    const double rhs = al * integrate(f, a, b) + be * integrate(g, a, b);
    CHECK(std::fabs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("spurious breakpoints leave smooth integrals unchanged") {
  const auto f = [](double x) { return std::exp(x); };
  const double plain = integrate(f, 0.0, 1.0);
  const double split = integrate(f, 0.0, 1.0, {0.3, 0.7});
  CHECK(std::fabs(plain - split) < 1e-12);
  CHECK(std::fabs(plain - (M_E - 1.0)) < 1e-12);
}

TEST_CASE("breakpoints outside the interval are ignored") {
  const auto f = [](double x) { return x * x; };
  const double v = integrate(f, 0.0, 1.0, {-5.0, 7.0, 0.5});
  CHECK(std::fabs(v - 1.0 / 3.0) < 1e-13);
}

TEST_CASE("divergent integrand exhausts depth and throws") {
  // nodes are interior so 1/x is finite at every evaluation, but the integral
  // diverges at 0
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0),
                  quadrature_error);
}

TEST_CASE("invalid configuration rejected") {
  QuadConfig cfg;
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0, 1, {}, cfg),
                  domain_error);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1, 0), domain_error);
}

TEST_CASE("empty interval") {
  CHECK(integrate([](double) { return 42.0; }, 1.0, 1.0) == 0.0);
}

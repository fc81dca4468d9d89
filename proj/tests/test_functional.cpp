#include <cmath>

#include <doctest.h>

#include "reflectode/functional.hpp"
#include "test_rng.hpp"

using namespace reflectode;

namespace {
Measure lebesgue() { return Measure::make(Expr::parse("1"), {}); }
}  // namespace

TEST_CASE("apply: Lebesgue density against cos") {
  const double v = apply(lebesgue(), [](double t) { return std::cos(t); }, 0.5);
  CHECK(std::fabs(v - 0.958851077208406) < 1e-8);  // 2 sin(1/2)
}

TEST_CASE("apply: single atom is a point evaluation") {
  const Measure F = Measure::make(std::nullopt, {{0.0, 1.0}});
  const double v = apply(F, [](double t) { return std::cos(t) - std::sin(t); }, 0.5);
  CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("apply: odd integrand on a symmetric interval") {
  const double v = apply(lebesgue(), [](double t) { return std::sin(t); }, 0.5);
  CHECK(std::fabs(v) < 1e-10);
}

TEST_CASE("total variation bound") {
  CHECK(total_variation_bound(lebesgue(), 0.5) == doctest::Approx(1.0));
  const Measure atoms = Measure::make(std::nullopt, {{-0.5, 1.0}, {0.5, -1.0}});
  CHECK(total_variation_bound(atoms, 0.5) == doctest::Approx(2.0));
  const Measure tdens = Measure::make(Expr::parse("t"), {});
  CHECK(std::fabs(total_variation_bound(tdens, 1.0) - 1.0) < 1e-10);
}

TEST_CASE("nonresonance gap examples") {
  const KernelParams p(1.0, 0.5);
  CHECK(std::fabs(nonresonance_gap(lebesgue(), p) - 0.958851077208406) < 1e-8);

  const Measure atom0 = Measure::make(std::nullopt, {{0.0, 1.0}});
  CHECK(nonresonance_gap(atom0, p) == doctest::Approx(1.0));

  // atoms at the endpoints reproduce the periodic-difference condition 2 sin a
  const Measure ends = Measure::make(std::nullopt, {{-0.5, 1.0}, {0.5, -1.0}});
  CHECK(nonresonance_gap(ends, p) ==
        doctest::Approx(2.0 * std::sin(0.5)).epsilon(1e-12));
}

TEST_CASE("apply is linear in x") {
  TestRng rng(424242);
  const Measure F = Measure::make(Expr::parse("cos(2*t)"), {{-0.25, 0.7}, {0.3, -1.2}});
  for (int k = 0; k < 10; ++k) {
    const double a1 = rng.uniform(-2, 2), b1 = rng.uniform(-2, 2);
    const double a2 = rng.uniform(-2, 2), b2 = rng.uniform(-2, 2);
    const double al = rng.uniform(-3, 3), be = rng.uniform(-3, 3);
    const auto x = [&](double t) { return a1 * std::cos(3 * t) + b1 * std::sin(t); };
    const auto y = [&](double t) { return a2 * std::cos(t) + b2 * std::sin(2 * t); };
    const double lhs =
        apply(F, [&](double t) { return al * x(t) + be * y(t); }, 0.5);
    const double rhs = al * apply(F, x, 0.5) + be * apply(F, y, 0.5);
    CHECK(std::fabs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("total variation dominates |F(x)| times sup") {
  const Measure F = Measure::make(Expr::parse("t - 0.1"), {{0.2, -0.4}});
  const double tv = total_variation_bound(F, 0.5);
  for (double w : {1.0, 2.0, 3.0}) {
    const auto x = [w](double t) { return std::cos(w * t); };
    double sup = 0.0;
    for (int i = 0; i <= 400; ++i)
      sup = std::max(sup, std::fabs(x(-0.5 + i / 400.0)));
    CHECK(std::fabs(apply(F, x, 0.5)) <= tv * sup + 1e-8);
  }
}

TEST_CASE("atom validation") {
  CHECK_THROWS_AS(Measure::make(std::nullopt, {{0.1, 1.0}, {0.1, 2.0}}), domain_error);
  const Measure outside = Measure::make(std::nullopt, {{2.0, 1.0}});
  CHECK_THROWS_AS(apply(outside, [](double) { return 1.0; }, 0.5), domain_error);
}

TEST_CASE("Lebesgue detection") {
  CHECK(lebesgue().is_lebesgue(0.5));
  CHECK_FALSE(Measure::make(Expr::parse("1"), {{0.0, 1.0}}).is_lebesgue(0.5));
  CHECK_FALSE(Measure::make(Expr::parse("cos(t)"), {}).is_lebesgue(0.5));
  CHECK_FALSE(Measure::make(Expr::parse("1.0000001"), {}).is_lebesgue(0.5));
  CHECK_FALSE(Measure::make(std::nullopt, {{0.0, 1.0}}).is_lebesgue(0.5));
  CHECK(Measure::make(Expr::parse("2 - 1"), {}).is_lebesgue(0.5));
}

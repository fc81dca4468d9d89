#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "reflectode/expr.hpp"
#include "test_rng.hpp"

using reflectode::Expr;

TEST_CASE("single function application") {
  const Expr e = Expr::parse("exp(t)");
  CHECK(e.eval(0.5) == doctest::Approx(1.6487212707001281).epsilon(1e-14));
  CHECK(e.eval(0.0) == doctest::Approx(1.0));
}

TEST_CASE("precedence and associativity") {
  CHECK(Expr::parse("1+2*3").eval(0) == doctest::Approx(7.0));
  CHECK(Expr::parse("2^3^2").eval(0) == doctest::Approx(512.0));
  CHECK(Expr::parse("2*sin(pi*t) - 1").eval(0.25) ==
        doctest::Approx(2.0 * std::sin(M_PI * 0.25) - 1.0).epsilon(1e-14));
  CHECK(Expr::parse("-2^2").eval(0) == doctest::Approx(-4.0));
  CHECK(Expr::parse("2^-3").eval(0) == doctest::Approx(0.125));
  CHECK(Expr::parse("6/3/2").eval(0) == doctest::Approx(1.0));
  CHECK(Expr::parse("1-2-3").eval(0) == doctest::Approx(-4.0));
}

TEST_CASE("cos minus sin at zero") {
  CHECK(Expr::parse("cos(t)-sin(t)").eval(0) == doctest::Approx(1.0));
}

TEST_CASE("whitespace insensitive") {
  CHECK(Expr::parse(" 2 * sin( pi * t ) - 1 ").eval(0.25) ==
        doctest::Approx(Expr::parse("2*sin(pi*t)-1").eval(0.25)));
}

TEST_CASE("token not in grammar reports position") {
  try {
    Expr::parse("2**t");
    FAIL("expected parse_error");
  } catch (const reflectode::parse_error& e) {
    CHECK(e.position() == 2);  // the second '*'
  }
}

TEST_CASE("unknown identifier rejected") {
  CHECK_THROWS_AS(Expr::parse("foo(t)"), reflectode::parse_error);
  CHECK_THROWS_AS(Expr::parse("t + q"), reflectode::parse_error);
}

TEST_CASE("malformed input rejected") {
  CHECK_THROWS_AS(Expr::parse("(1+2"), reflectode::parse_error);
  CHECK_THROWS_AS(Expr::parse("sin t"), reflectode::parse_error);
  CHECK_THROWS_AS(Expr::parse(""), reflectode::parse_error);
  CHECK_THROWS_AS(Expr::parse("1 2"), reflectode::parse_error);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(Expr::parse("1/t").eval(0.0), reflectode::eval_error);
  CHECK_THROWS_AS(Expr::parse("log(t)").eval(-1.0), reflectode::eval_error);
  CHECK_THROWS_AS(Expr::parse("log(t)").eval(0.0), reflectode::eval_error);
  CHECK_THROWS_AS(Expr::parse("sqrt(t)").eval(-1.0), reflectode::eval_error);
  CHECK_NOTHROW(Expr::parse("1/t").eval(0.5));
}

TEST_CASE("constants fold") {
  CHECK(Expr::parse("pi").eval(0) == doctest::Approx(M_PI));
  CHECK(Expr::parse("e").eval(0) == doctest::Approx(M_E));
}

TEST_CASE("pretty-print round trip evaluates identically") {
  const std::vector<std::string> srcs = {
      "exp(t)",
      "2*sin(pi*t) - 1",
      "cos(t)-sin(t)",
      "t^2 - 3*t + 0.5",
      "sinh(t)*cosh(t)/(1+t^2)",
      "abs(t - 0.25) + sqrt(t^2 + 1)",
      "-t^3 + 2^-t",
  };
  TestRng rng(20240901);
  for (const auto& src : srcs) {
    const Expr a = Expr::parse(src);
    const Expr b = Expr::parse(a.to_string());
    for (int i = 0; i < 100; ++i) {
      const double t = rng.uniform(-2.0, 2.0);
      CHECK(std::fabs(a.eval(t) - b.eval(t)) < 1e-12);
    }
  }
}

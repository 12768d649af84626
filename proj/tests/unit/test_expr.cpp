#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mopf/expr.hpp"

using mopf::EvalError;
using mopf::Expression;
using mopf::ParseError;

namespace {
double ev(const std::string& text, std::map<std::string, double> vars) {
  return Expression::parse(text).evaluate(vars);
}
}  // namespace

TEST_CASE("basic arithmetic and precedence") {
  CHECK(ev("1+2*3", {}) == 7.0);
  CHECK(ev("(1+2)*3", {}) == 9.0);
  CHECK(ev("2^3", {}) == 8.0);
  CHECK(ev("-2^2", {}) == -4.0);  // ^ binds tighter than unary minus
  CHECK(ev("(-2)^2", {}) == 4.0);
  CHECK(ev("10-4-3", {}) == 3.0);
  CHECK(ev("16/4/2", {}) == 2.0);
  CHECK(ev("2*-3", {}) == -6.0);
  CHECK(ev("x1^0", {{"x1", 123.0}}) == 1.0);
  CHECK(ev("x1^0", {{"x1", 0.0}}) == 1.0);
}

TEST_CASE("quarter-disc constraint at a front point") {
  CHECK(ev("(x1-4)^2 + (x2-4)^2 - 16", {{"x1", 0}, {"x2", 4}}) == 0.0);
  CHECK(ev("3*x1+2*x2+3*x3", {{"x1", 6}, {"x2", 0}, {"x3", 0}}) == 18.0);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(Expression::parse("x1 + * 2"), ParseError);
  CHECK_THROWS_AS(Expression::parse(""), ParseError);
  CHECK_THROWS_AS(Expression::parse("(x1"), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1 x2"), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1 ^ -2"), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1 ^ 2.5"), ParseError);
  CHECK_THROWS_AS(Expression::parse("x1 $ 2"), ParseError);
  try {
    Expression::parse("x1 + * 2");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(ev("1/x1", {{"x1", 0.0}}), EvalError);
  CHECK_THROWS_AS(ev("x1+x2", {{"x1", 1.0}}), EvalError);  // missing variable
}

TEST_CASE("bound evaluation matches named evaluation") {
  Expression e = Expression::parse("x2^2 - 3*x1 + 0.5");
  e.bind({{"x1", 0}, {"x2", 1}});
  std::vector<double> vals{2.0, 5.0};
  CHECK(e.eval(vals) == ev("x2^2 - 3*x1 + 0.5", {{"x1", 2.0}, {"x2", 5.0}}));
}

TEST_CASE("print/parse round trip is structurally stable") {
  const char* samples[] = {
      "x1",
      "-x1^2",
      "1 + 2*x1 - x2/4",
      "(x1-4)^2 + (x2-4)^2 - 16",
      "-(x1 + x2)*x3",
      "0.692 + 0.477*x1 - 0.687*x4 - 0.167*x1^2",
      "1/(x1+1)",
      "x1 - (x2 - x3)",
      "2*(x1/(x2*x3))^3",
  };
  for (const char* s : samples) {
    Expression a = Expression::parse(s);
    Expression b = Expression::parse(a.to_string());
    CAPTURE(s);
    CAPTURE(a.to_string());
    CHECK(a.same_structure(b));
  }
}

TEST_CASE("round trip preserves values on random inputs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  Expression a = Expression::parse("0.37 - 0.205*x1 + 0.0998*x4^2 + 0.281*x1*x3*x4");
  Expression b = Expression::parse(a.to_string());
  for (int i = 0; i < 50; ++i) {
    std::map<std::string, double> vars{
        {"x1", unit(rng)}, {"x3", unit(rng)}, {"x4", unit(rng)}};
    CHECK(a.evaluate(vars) == b.evaluate(vars));
  }
}

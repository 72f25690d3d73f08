#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "korovkin/expression.hpp"

using namespace korovkin;

namespace {
constexpr double kPi = 3.14159265358979323846;

double eval(const char* text, double x) { return Expression::parse(text)(x); }

std::size_t fail_offset(const char* text) {
  try {
    (void)Expression::parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected ParseError for: ", text);
  return static_cast<std::size_t>(-1);
}

Expression random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  std::uniform_real_distribution<double> num(0.0, 8.0);
  switch (pick(rng)) {
    case 0: return Expression::number(num(rng));
    case 1: return Expression::variable();
    case 2: return Expression::pi();
    case 3: return Expression::binary('+', random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 4: return Expression::binary('-', random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: return Expression::binary('*', random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 6: return Expression::binary('/', random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 7: return Expression::binary('^', random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 8: return Expression::negate(random_tree(rng, depth - 1));
    default: {
      std::uniform_int_distribution<int> f(0, 4);
      const Expression::Fn fns[] = {Expression::Fn::sin, Expression::Fn::cos, Expression::Fn::exp,
                                    Expression::Fn::abs, Expression::Fn::sqrt};
      return Expression::call(fns[f(rng)], random_tree(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("evaluation and precedence") {
  CHECK(eval("2+3*4", 0.0) == 14.0);
  CHECK(eval("2*3+4", 0.0) == 10.0);
  CHECK(eval("(2+3)*4", 0.0) == 20.0);
  CHECK(eval("2-3-4", 0.0) == -5.0);
  CHECK(eval("16/4/2", 0.0) == 2.0);
  CHECK(eval("2^3^2", 0.0) == 512.0);     // right-associative
  CHECK(eval("-2^2", 0.0) == -4.0);       // ^ binds tighter than unary -
  CHECK(eval("2^-3", 0.0) == 0.125);
  CHECK(eval("--2", 0.0) == 2.0);
  CHECK(eval("2*-3", 0.0) == -6.0);
  CHECK(eval("x", 0.75) == 0.75);
  CHECK(eval("pi", 0.0) == doctest::Approx(kPi));
  CHECK(eval("  1.5e2 + .5 ", 0.0) == 150.5);
}

TEST_CASE("functions") {
  CHECK(eval("cos(x)", 0.0) == 1.0);
  CHECK(eval("2-2*cos(x)", kPi) == doctest::Approx(4.0));
  CHECK(eval("exp(abs(x)/pi)", -kPi) == doctest::Approx(std::exp(1.0)));
  CHECK(eval("sqrt(x)", 4.0) == 2.0);
  CHECK(eval("sin(x/2)^2", kPi) == doctest::Approx(1.0));
  CHECK(eval("1/(1+25*(2*x-1)^2)", 0.5) == doctest::Approx(1.0));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(fail_offset("2+") == 2);
  CHECK(fail_offset("sin") == 3);
  CHECK(fail_offset("sin(x") == 5);
  CHECK(fail_offset("2 + $") == 4);
  CHECK(fail_offset("foo(x)") == 0);
  CHECK(fail_offset(")x") == 0);
  CHECK(fail_offset("1 2") == 2);
  CHECK(fail_offset("(1+2") == 4);
  CHECK(fail_offset("") == 0);
  CHECK(fail_offset("x+*2") == 2);
}

TEST_CASE("printing is reparseable") {
  CHECK(Expression::parse("2+3*4").str() == "2+3*4");
  CHECK(Expression::parse("(2+3)*4").str() == "(2+3)*4");
  CHECK(Expression::parse("2^3^2").str() == "2^3^2");
  CHECK(Expression::parse("(2^3)^2").str() == "(2^3)^2");
  CHECK(Expression::parse("-(x+1)").str() == "-(x+1)");
  CHECK(Expression::parse("2^-3").str() == "2^-3");
  CHECK(Expression::parse("x-(1-x)").str() == "x-(1-x)");
  CHECK(Expression::parse("sin(x/2)^2").str() == "sin(x/2)^2");
}

TEST_CASE("parse of printed tree reproduces the tree") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Expression t = random_tree(rng, 5);
    const std::string s = t.str();
    CAPTURE(s);
    const Expression u = Expression::parse(s);
    CHECK(t == u);
  }
}

TEST_CASE("domain validation") {
  const Expression ok = Expression::parse("1/(1+25*(2*x-1)^2)");
  CHECK_NOTHROW(ok.validate_on(Interval::unit(), 101));

  const Expression neg_sqrt = Expression::parse("sqrt(x-2)");
  CHECK_THROWS_AS(neg_sqrt.validate_on(Interval::unit(), 101), std::domain_error);

  const Expression pole = Expression::parse("1/(x-0.5)");
  CHECK_THROWS_AS(pole.validate_on(Interval::unit(), 101), std::domain_error);

  // the pole sits outside the sampled circle grid only if it is never hit;
  // x = pi is excluded by the periodic convention, so this passes
  const Expression edge = Expression::parse("1/(x-pi)");
  CHECK_NOTHROW(edge.validate_on(Interval::circle(), 64));
}

TEST_CASE("function adapter") {
  const RealFunction f = Expression::parse("x^2").function();
  CHECK(f(3.0) == 9.0);
}

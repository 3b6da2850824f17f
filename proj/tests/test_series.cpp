#include "doctest.h"
#include "padyn/error.hpp"
#include "padyn/series.hpp"

using namespace padyn;

TEST_CASE("parse and print") {
  auto u = TruncatedSeries::parse("x^3*(1 + 2*x + 0*x^2 - 1/3*x^3)", 3);
  REQUIRE(u.truncation_order() == 3);
  CHECK(u.coefficient(0) == 1);
  CHECK(u.coefficient(1) == 2);
  CHECK(u.coefficient(3) == Rational(-1, 3));
  CHECK(u.coefficient(7) == 0);
  CHECK(TruncatedSeries::parse(u.to_string(), 3) == u);
  CHECK(TruncatedSeries::parse("x^3*(1)").truncation_order() == 0);
  CHECK_THROWS_AS(TruncatedSeries::parse("x^3*(2 + x)"), Error);
  CHECK_THROWS_AS(TruncatedSeries::parse("x^2*(1 + x)"), Error);
}

TEST_CASE("evaluation matches the polynomial") {
  const long p = 5;
  auto u = TruncatedSeries::parse("x^3*(1 + 3*x + 2*x^2)", p);
  for (long k : {5L, 10L, 25L, -15L, 35L}) {
    Rational x(k);
    Rational expect = x * x * x * (1 + 3 * x + 2 * x * x);
    auto got = evaluate(u, PadicNumber::from_rational(x, p, 10));
    CHECK(got == PadicNumber::from_rational(expect, p, 10));
    CHECK(got.valuation() == 3 * valuation(x, Integer(p)));
  }
  CHECK(evaluate(u, PadicNumber::zero(p, 10)).is_zero());
  CHECK_THROWS_AS(evaluate(u, PadicNumber::from_integer(Integer(1), p, 10)), Error);
  auto frac = TruncatedSeries::parse("x^3*(1 + 1/5*x)", p);
  CHECK_THROWS_AS(evaluate(frac, PadicNumber::from_integer(Integer(5), p, 10)), Error);
  CHECK_THROWS_AS(evaluate(u, PadicNumber::from_integer(Integer(3), 3, 10)), Error);
}

TEST_CASE("orbits shrink toward zero") {
  const long p = 3;
  auto u = TruncatedSeries::parse("x^3*(1 + x + 2*x^2)", p);
  auto orbit = iterate(u, PadicNumber::from_integer(Integer(6), p, 20), 3);
  REQUIRE(orbit.iterates.size() == 4);
  CHECK(orbit.valuations == std::vector<int>{1, 3, 9, 27});
  CHECK_THROWS_AS(iterate(u, PadicNumber::from_integer(Integer(2), p, 20), 2), Error);
}

TEST_CASE("V_n membership") {
  const long p = 3;
  auto u = TruncatedSeries::parse("x^3*(1 + x)", p);
  auto x = PadicNumber::from_integer(Integer(9), p, 10);
  CHECK(vn_membership(u, x, 6));
  CHECK_FALSE(vn_membership(u, x, 5));
  CHECK(vn_membership(u, PadicNumber::from_integer(Integer(3), p, 10), 3));
}

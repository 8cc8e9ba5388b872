#include <gtest/gtest.h>

#include <random>

#include "ramcover/poly_text.hpp"
#include "ramcover/ratfunc.hpp"

using namespace ramcover;

namespace {

RatFunc r(const char* s) { return parse_ratfunc(s); }

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-5, 5);
  auto poly = [&](int deg) {
    std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& x : cs) x = Rational(c(rng));
    return QPoly(cs);
  };
  QPoly den = poly(2);
  if (den.is_zero()) den = QPoly(Rational(1));
  return RatFunc(poly(3), den);
}

}  // namespace

TEST(RatFunc, ReducesAndNormalizes) {
  const RatFunc f = r("(2*x^2-2)/(4*x+4)");
  EXPECT_EQ(f.num(), parse_qpoly("x/2-1/2"));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(to_string(r("x^3/(9*x^2+24*x+16)")), "x^3/(9*x^2+24*x+16)");
  EXPECT_TRUE(r("(x^2+4*x)/(27*x^3+108*x^2+144*x+64)").den().leading().is_one());
}

TEST(RatFunc, ZeroDenominatorThrows) {
  EXPECT_THROW(RatFunc(QPoly::variable('x'), QPoly('x')), DivisionByZero);
  EXPECT_THROW(RatFunc().inverse(), DivisionByZero);
  EXPECT_THROW(r("1/(x-1)")(Rational(1)), DivisionByZero);
}

TEST(RatFunc, DerivativeQuotientRule) {
  EXPECT_EQ(r("1/x").derivative(), r("-1/x^2"));
  // f1 of the genus-2 family: (x^3/(3x+4)^2)' = 3 x^2 (x+4) / (3x+4)^3.
  EXPECT_EQ(r("x^3/(3*x+4)^2").derivative(), r("3*x^2*(x+4)/(3*x+4)^3"));
}

TEST(RatFunc, Compose) {
  EXPECT_EQ(r("x^2+1").compose(r("1/x")), r("(1+x^2)/x^2"));
  EXPECT_EQ(r("1/(x-1)").compose(r("x+1")), r("1/x"));
}

TEST(RatFunc, FieldAndLeibnizRandom) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    ASSERT_EQ(a + b - b, a);
    ASSERT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) {
      ASSERT_EQ(a / b * b, a);
      ASSERT_EQ(b * b.inverse(), RatFunc(QPoly(Rational(1))));
    }
  }
}

TEST(RatFunc, IntegerFraction) {
  auto [num, den] = integer_fraction(r("(x/2)/(x/3+1)"));
  EXPECT_EQ(num, parse_qpoly("3*x"));
  EXPECT_EQ(den, parse_qpoly("2*x+6"));
}

#include <gtest/gtest.h>

#include <random>

#include "ramcover/rational.hpp"

using ramcover::Integer;
using ramcover::Rational;

TEST(Rational, NormalizesOnConstruction) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r.to_string(), "-3/2");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), ramcover::DivisionByZero);
  EXPECT_THROW(Rational(0L).inverse(), ramcover::DivisionByZero);
  EXPECT_THROW(Rational(3L) / Rational(0L), ramcover::DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-12/8"), Rational(Integer(-3), Integer(2)));
  EXPECT_EQ(Rational::parse("7"), Rational(7L));
  EXPECT_THROW(Rational::parse("1/0"), ramcover::Error);
  EXPECT_THROW(Rational::parse("abc"), ramcover::ParseError);
  EXPECT_THROW(Rational::parse(""), ramcover::ParseError);
}

TEST(Rational, BeyondMachineWords) {
  Rational big(1L);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007L);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000000007L);
  EXPECT_TRUE(back.is_one());
  EXPECT_GT(big.to_string().size(), 300u);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(ramcover::binomial(5, 2), Integer(10));
  EXPECT_EQ(ramcover::binomial(7, 0), Integer(1));
  EXPECT_EQ(ramcover::binomial(3, 5), Integer(0));
  // Pascal's rule against the closed form.
  for (std::uint64_t n = 1; n < 70; ++n)
    for (std::uint64_t k = 1; k < n; ++k)
      ASSERT_EQ(ramcover::binomial(n, k), ramcover::binomial(n - 1, k - 1) + ramcover::binomial(n - 1, k));
}

TEST(Rational, Sqrt) {
  EXPECT_EQ(ramcover::rational_sqrt(Rational(Integer(9), Integer(16))), Rational(Integer(3), Integer(4)));
  EXPECT_FALSE(ramcover::rational_sqrt(Rational(2L)).has_value());
  EXPECT_FALSE(ramcover::rational_sqrt(Rational(-4L)).has_value());
  EXPECT_EQ(ramcover::rational_sqrt(Rational(0L)), Rational(0L));
}

TEST(Rational, FieldAxiomsRandom) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  auto draw = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a - b + b, a);
    if (!b.is_zero()) {
      ASSERT_EQ(a / b * b, a);
    }
    ASSERT_EQ(a < b, !(a >= b));
  }
}

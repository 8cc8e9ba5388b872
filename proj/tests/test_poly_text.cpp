#include <gtest/gtest.h>

#include <random>

#include "ramcover/poly_text.hpp"

using namespace ramcover;

TEST(PolyText, PrintsCanonicalForms) {
  EXPECT_EQ(to_string(parse_qpoly("4+3*x")), "3*x+4");
  EXPECT_EQ(to_string(parse_qpoly("-x^2+x/2-1")), "-x^2+1/2*x-1");
  EXPECT_EQ(to_string(QPoly('x')), "0");
  EXPECT_EQ(to_string(parse_qt_poly("x*(x+1)*(x+t)")), "x^3+(1+t)*x^2+t*x");
  EXPECT_EQ(to_string(parse_ratfunc("x^3/(3*x+4)^2")), "x^3/(9*x^2+24*x+16)");
}

TEST(PolyText, ParsesProductsPowersAndSigns) {
  EXPECT_EQ(parse_qpoly("(x+1)^3"), parse_qpoly("x^3+3*x^2+3*x+1"));
  EXPECT_EQ(parse_qpoly("-(x-2)"), parse_qpoly("2-x"));
  EXPECT_EQ(parse_qpoly(" 2 * x ^ 2 "), parse_qpoly("2*x^2"));
  EXPECT_EQ(parse_qt_poly("t*x - t*x"), QtPoly('x'));
}

TEST(PolyText, Rejects) {
  for (const char* bad : {"", "x^", "x+*2", "(x+1", "x)", "y", "x^-1", "2 3", "x^99999", "1/0"})
    EXPECT_THROW(parse_qt_poly(bad), Error) << bad;
  EXPECT_THROW(parse_qt_poly("1/x"), ParseError);
  EXPECT_THROW(parse_ratfunc("t*x"), ParseError);
  EXPECT_THROW(parse_qpoly("t*x"), ParseError);
}

TEST(PolyText, RoundTripRandomQt) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> c(-30, 30), d(1, 7);
  std::uniform_int_distribution<int> deg(0, 6), tdeg(0, 3);
  for (int i = 0; i < 300; ++i) {
    std::vector<QPoly> cs(static_cast<std::size_t>(deg(rng)) + 1, QPoly('t'));
    for (auto& tc : cs) {
      std::vector<Rational> v(static_cast<std::size_t>(tdeg(rng)) + 1);
      for (auto& r : v) r = Rational(Integer(c(rng)), Integer(d(rng)));
      tc = QPoly(v, 't');
    }
    const QtPoly p(cs, 'x');
    const std::string s = to_string(p);
    ASSERT_EQ(parse_qt_poly(s), p) << s;
    ASSERT_EQ(to_string(parse_qt_poly(s)), s);
  }
}

TEST(PolyText, RoundTripRandomRatFunc) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> n(4), d(3);
    for (auto& r : n) r = Rational(c(rng));
    for (auto& r : d) r = Rational(c(rng));
    if (QPoly(d).is_zero()) continue;
    const RatFunc f{QPoly(n), QPoly(d)};
    ASSERT_EQ(parse_ratfunc(to_string(f)), f) << to_string(f);
  }
}

#include <gtest/gtest.h>

#include "ramcover/family.hpp"
#include "ramcover/selftest/oracles.hpp"

using namespace ramcover;

TEST(Family, CompanionPolynomialsSmallGenus) {
  EXPECT_EQ(j_poly(1), parse_qpoly("1"));
  EXPECT_EQ(k_poly(1), parse_qpoly("1"));
  EXPECT_EQ(j_poly(2), parse_qpoly("3*x+4"));
  EXPECT_EQ(k_poly(2), parse_qpoly("x+4"));
  EXPECT_EQ(j_poly(3), parse_qpoly("5*x^2+20*x+16"));
  EXPECT_EQ(k_poly(3), parse_qpoly("x^2+12*x+16"));
  EXPECT_THROW(j_poly(0), InvalidGenus);
  EXPECT_THROW(build_family(-1), InvalidGenus);
}

TEST(Family, MatchesOracleExpansion) {
  for (int g = 1; g <= 15; ++g) {
    const oracle::CompanionExpansion ref = oracle::companion_expansion(g);
    ASSERT_EQ(j_poly(g), ref.j) << g;
    ASSERT_EQ(k_poly(g), ref.k) << g;
    ASSERT_TRUE(companion_identities(g).holds()) << g;
  }
}

TEST(Family, PublishedCurves) {
  EXPECT_EQ(build_family(2).cover.source.rhs(), parse_qt_poly("x^5+(1+9*t)*x^4+33*t*x^3+40*t*x^2+16*t*x"));
  EXPECT_EQ(build_family(3).cover.source.rhs(),
            parse_qt_poly("x^7+(1+25*t)*x^6+225*t*x^5+760*t*x^4+1200*t*x^3+896*t*x^2+256*t*x"));
}

TEST(Family, CoverShape) {
  for (int g = 1; g <= 10; ++g) {
    const FamilyInstance fam = build_family(g);
    const int n = 2 * g - 1;
    const QPoly j = oracle::companion_expansion(g).j, k = oracle::companion_expansion(g).k;
    ASSERT_EQ(fam.cover.target, legendre_curve());
    ASSERT_EQ(fam.cover.degree, n);
    ASSERT_EQ(genus_arithmetic(fam.cover.source), g);
    // f1 = x^n / j^2, f2 = x^(g-1) k / j^3
    ASSERT_EQ(fam.cover.map.f1, RatFunc(oracle::x_to(static_cast<std::size_t>(n)), j * j));
    ASSERT_EQ(fam.cover.map.f2, RatFunc(oracle::x_to(static_cast<std::size_t>(g - 1)) * k, j * j * j));
    ASSERT_TRUE(verify_cover_identity(fam.cover).holds);
    ASSERT_EQ(pullback_invariant_differential(fam.cover),
              RatFunc(oracle::x_to(static_cast<std::size_t>(g - 1)).scaled(Rational(n))));
  }
}

TEST(Family, GenusOneIsIdentity) {
  const FamilyInstance fam = build_family(1);
  EXPECT_EQ(fam.cover.source, fam.cover.target);
  EXPECT_EQ(fam.cover.map.f1, RatFunc::variable('x'));
}

#include <gtest/gtest.h>

#include "ramcover/degeneration.hpp"
#include "ramcover/family.hpp"
#include "ramcover/selftest/oracles.hpp"

using namespace ramcover;

TEST(Degeneration, Normalizations) {
  EXPECT_TRUE(normalize_nodal_cubic().parametrizes(parse_qpoly("x^3+x^2", 'u')));
  for (int g = 2; g <= 6; ++g) {
    EXPECT_EQ(degenerate_source_rhs(g), oracle::x_to(static_cast<std::size_t>(2 * g)) * parse_qpoly("x+1"));
    const QPoly in_x = degenerate_source_rhs(g);
    const QPoly rhs(std::vector<Rational>(in_x.coeffs().begin(), in_x.coeffs().end()), 'u');
    EXPECT_TRUE(normalize_degenerate_source(g).parametrizes(rhs));
  }
  EXPECT_THROW(normalize_degenerate_source(1), InvalidGenus);
}

TEST(Degeneration, TwoBranchMap) {
  EXPECT_EQ(two_branch_map(3), parse_ratfunc("(x^3+3*x)/(3*x^2+1)").compose(RatFunc::variable('z')));
  EXPECT_THROW(two_branch_map(2), InvalidDegree);
  EXPECT_THROW(two_branch_map(-1), InvalidDegree);
  for (int n = 1; n <= 9; n += 2) {
    const RatFunc tm = two_branch_map(n);
    EXPECT_EQ(tm(Rational(1)), Rational(1));
    EXPECT_EQ(tm(Rational(-1)), Rational(-1));
    // T' (den)^2 = 4n (1-z^2)^(n-1), from the oracle expansions.
    const QPoly plus = oracle::one_plus_u_power(1, n), minus = oracle::one_plus_u_power(-1, n);
    const QPoly den = plus + minus;
    const QPoly one_minus_sq = QPoly(std::vector<Rational>{1L, 0L, -1L}, 'u');
    QPoly expect = QPoly(Rational(4L * n), 'u');
    for (int i = 1; i < n; ++i) expect = expect * one_minus_sq;
    const RatFunc lhs = two_branch_map(n, 'u').derivative() * RatFunc(den * den);
    EXPECT_EQ(lhs, RatFunc(expect)) << n;
  }
}

TEST(Degeneration, DegenerateCoverIsFamilyAtZero) {
  for (int g = 2; g <= 6; ++g) {
    const Cover c = degenerate_cover(g);
    const Cover fam = build_family(g).cover;
    EXPECT_TRUE(verify_cover_identity(c).holds);
    EXPECT_EQ(c.map, fam.map) << g;
    EXPECT_EQ(c.source, specialize_t(fam.source, Rational(0)));
    EXPECT_EQ(c.target, specialize_t(fam.target, Rational(0)));
    EXPECT_EQ(genus_geometric(c.source), 0);
    EXPECT_EQ(genus_geometric(c.target), 0);
  }
  EXPECT_THROW(degenerate_cover(1), InvalidGenus);
}

TEST(Degeneration, Genus2Ansatz) {
  const DeformationAnsatz a = make_deformation_ansatz(2);
  EXPECT_EQ(a.unknowns(), 7u);
  EXPECT_EQ(a.names, (std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"}));
  const DeformationReport rep = deform_with_report(a);
  EXPECT_EQ(rep.system.rows(), 6u);
  EXPECT_EQ(rep.solve.nullity, 1u);
  const std::vector<Rational> expected{9L, 33L, 40L, 16L, 0L, 0L, 0L};
  EXPECT_EQ(rep.solve.solution, expected);
  EXPECT_TRUE(rep.system.satisfied_by(rep.solve.solution));
  EXPECT_TRUE(rep.exactness.holds);
}

TEST(Degeneration, RecoversFamily) {
  for (int g = 2; g <= 6; ++g) {
    const DeformationReport rep = deform_with_report(g);
    EXPECT_EQ(rep.ansatz.unknowns(), static_cast<std::size_t>(4 * g - 1));
    EXPECT_EQ(rep.instance, build_family(g)) << g;
  }
}

TEST(Degeneration, ManyUnknownNames) {
  const DeformationAnsatz a = make_deformation_ansatz(8);
  EXPECT_EQ(a.unknowns(), 31u);
  EXPECT_EQ(a.names.front(), "a1");
  EXPECT_EQ(a.names[a.curve_slots.size()], "d1");
  EXPECT_EQ(a.names.back(), "n" + std::to_string(a.num_slots.size()));
}

TEST(Degeneration, MissingCurveSlotIsFirstOrderOnly) {
  DeformationAnsatz a = make_deformation_ansatz(2);
  a.curve_slots.erase(a.curve_slots.begin());
  a.names.erase(a.names.begin());
  EXPECT_THROW(deform_with_report(a), FirstOrderOnly);
}

TEST(Degeneration, MissingLinearSlotIsInconsistent) {
  DeformationAnsatz a = make_deformation_ansatz(2);
  a.curve_slots.pop_back();
  a.names.erase(a.names.begin() + 3);
  EXPECT_THROW(deform_with_report(a), DeformationFailed);
}

TEST(Degeneration, WrongTargetDeformation) {
  DeformationAnsatz a = make_deformation_ansatz(2);
  a.target = parse_qt_poly("x^3+(1+2*t)*x^2+t*x");
  EXPECT_THROW(deform_with_report(a), FirstOrderOnly);
  a.target = parse_qt_poly("x^3+(1+t)*x^2+(1+t)*x");
  EXPECT_THROW(deform_with_report(a), PipelineError);
}

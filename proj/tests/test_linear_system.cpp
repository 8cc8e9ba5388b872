#include <gtest/gtest.h>

#include <random>

#include "ramcover/linear_system.hpp"

using namespace ramcover;

TEST(LinearSystem, UniqueSolution) {
  LinearSystem s(2);
  s.add_equation({Rational(2), Rational(1)}, Rational(5));
  s.add_equation({Rational(1), Rational(-1)}, Rational(1));
  const SolveResult r = solve_exact(s);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.solution, (std::vector<Rational>{Rational(2), Rational(1)}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.nullity, 0u);
}

TEST(LinearSystem, RationalCoefficientsAndFreeColumns) {
  LinearSystem s(3);
  s.add_equation({Rational(Integer(1), Integer(2)), Rational(0), Rational(1)}, Rational(Integer(3), Integer(4)));
  const SolveResult r = solve_exact(s);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.nullity, 2u);
  EXPECT_EQ(r.solution[1], Rational(0));
  EXPECT_EQ(r.solution[2], Rational(0));
  EXPECT_TRUE(s.satisfied_by(r.solution));
}

TEST(LinearSystem, Inconsistent) {
  LinearSystem s(1);
  s.add_equation({Rational(1)}, Rational(1));
  s.add_equation({Rational(2)}, Rational(3));
  EXPECT_FALSE(solve_exact(s).solved());
}

TEST(LinearSystem, WrongRowLengthThrows) {
  LinearSystem s(2);
  EXPECT_THROW(s.add_equation({Rational(1)}, Rational(0)), InvalidInput);
}

TEST(LinearSystem, ResubstitutionRandom) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> c(-20, 20), sz(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(sz(rng)), cols = static_cast<std::size_t>(sz(rng));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = Rational(Integer(c(rng)), Integer(std::abs(c(rng)) + 1));
    LinearSystem s(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<Rational> row(cols);
      Rational b;
      for (std::size_t j = 0; j < cols; ++j) {
        row[j] = Rational(c(rng));
        b += row[j] * x[j];
      }
      s.add_equation(row, b);
    }
    const SolveResult r = solve_exact(s);
    ASSERT_TRUE(r.solved());
    ASSERT_EQ(r.rank + r.nullity, cols);
    ASSERT_TRUE(s.satisfied_by(r.solution));
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ramcover/origami.hpp"

using namespace ramcover;

TEST(Permutation, ParseAndPrint) {
  const Permutation p = Permutation::parse(5, "(1 3 2)(4 5)");
  EXPECT_EQ(p(0), 2u);
  EXPECT_EQ(p.to_string(), "(1 3 2)(4 5)");
  EXPECT_EQ(Permutation(4).to_string(), "()");
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(Permutation::parse(3, "(1 4)"), ParseError);
  EXPECT_THROW(Permutation::parse(3, "(1 1)"), ParseError);
  EXPECT_THROW(Permutation::parse(3, "(1 2"), ParseError);
}

TEST(Permutation, LeftToRightComposition) {
  const Permutation a = Permutation::parse(3, "(1 2)"), b = Permutation::parse(3, "(2 3)");
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ(a.then(b)(0), 2u);
  EXPECT_TRUE(a.then(a.inverse()).is_identity());
}

TEST(Origami, LShape) {
  const OrigamiDiagram d = OrigamiDiagram::parse("3; right=(2 3); up=(1 2)");
  EXPECT_EQ(commutator(d), Permutation::parse(3, "(1 3 2)"));
  EXPECT_EQ(commutator(d).to_string(), "(1 3 2)");
  EXPECT_EQ(vertex_count(d), 1u);
  EXPECT_TRUE(is_connected(d));
  EXPECT_EQ(genus(d), 2);
  EXPECT_EQ(d.to_string(), "3; right=(2 3); up=(1 2)");
}

TEST(Origami, TorusAndDisconnected) {
  const OrigamiDiagram torus(Permutation(1), Permutation(1));
  EXPECT_EQ(genus(torus), 1);
  const OrigamiDiagram split(Permutation(2), Permutation(2));
  EXPECT_FALSE(is_connected(split));
  EXPECT_THROW(genus(split), NotConnected);
  EXPECT_THROW(OrigamiDiagram(Permutation(2), Permutation(3)), InvalidInput);
  EXPECT_THROW(OrigamiDiagram::parse("3; right=(2 3)"), ParseError);
}

TEST(Origami, Staircases) {
  EXPECT_EQ(staircase(2).to_string(), "3; right=(2 3); up=(1 2)");
  EXPECT_EQ(commutator(staircase(3)).to_string(), "(1 4 3 2 5)");
  EXPECT_EQ(commutator(staircase(4)).to_string(), "(1 4 7 3 2 6 5)");
  EXPECT_THROW(staircase(0), InvalidGenus);
  for (int g = 1; g <= 25; ++g) {
    const OrigamiDiagram d = staircase(g);
    const auto n = static_cast<std::size_t>(2 * g - 1);
    ASSERT_EQ(d.squares(), n);
    ASSERT_EQ(monodromy_cycle_type(d), std::vector<std::size_t>{n});
    ASSERT_EQ(genus(d), g);
  }
}

TEST(Origami, RelabelingInvariance) {
  std::mt19937 rng(8);
  for (int g = 2; g <= 6; ++g) {
    const OrigamiDiagram d = staircase(g);
    std::vector<std::size_t> images(d.squares());
    std::iota(images.begin(), images.end(), 1);
    for (int i = 0; i < 50; ++i) {
      std::shuffle(images.begin(), images.end(), rng);
      const OrigamiDiagram r = d.relabeled(Permutation::from_images(images));
      ASSERT_EQ(monodromy_cycle_type(r), monodromy_cycle_type(d));
      ASSERT_EQ(genus(r), g);
      ASSERT_EQ(OrigamiDiagram::parse(r.to_string()).to_string(), r.to_string());
    }
  }
}

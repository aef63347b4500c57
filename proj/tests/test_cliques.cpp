#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "graphroots/cliques.hpp"
#include "graphroots/error.hpp"
#include "graphroots/generators.hpp"

using namespace graphroots;
using namespace graphroots::testing;

TEST(MaximalCliquesTest, CompleteGraphHasOne) {
  const CliqueList list = enumerate_maximal_cliques(gen::complete(4));
  EXPECT_TRUE(list.complete);
  EXPECT_EQ(list.cliques, (std::vector<VertexSet>{{0, 1, 2, 3}}));
}

TEST(MaximalCliquesTest, SquaredPath) {
  const CliqueList list = enumerate_maximal_cliques(square(gen::path(4)));
  EXPECT_EQ(list.cliques, (std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}}));
}

TEST(MaximalCliquesTest, OctahedronExceedsCapOfSix) {
  const Graph g = square(gen::cycle(6));
  const CliqueList capped = enumerate_maximal_cliques(g, 6);
  EXPECT_FALSE(capped.complete);
  const CliqueList all = enumerate_maximal_cliques(g);
  EXPECT_TRUE(all.complete);
  EXPECT_EQ(all.cliques.size(), 8u);
  EXPECT_TRUE(enumerate_maximal_cliques(g, 8).complete);
}

TEST(MaximalCliquesTest, IsolatedVerticesAreSingletons) {
  const CliqueList list = enumerate_maximal_cliques(Graph(3));
  EXPECT_EQ(list.cliques, (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_TRUE(enumerate_maximal_cliques(Graph(0)).cliques.empty());
}

TEST(MaximalCliquesTest, AgreesWithSubsetEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      EXPECT_EQ(enumerate_maximal_cliques(g).cliques, bf_maximal_cliques(g));
    }
  }
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen::gnp(8 + trial % 7, 0.5, rng);
    EXPECT_EQ(enumerate_maximal_cliques(g).cliques, bf_maximal_cliques(g));
  }
}

TEST(MaximalCliquesTest, CapStopsJustPastTheBound) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = gen::gnp(10, 0.5, rng);
    const std::size_t total = bf_maximal_cliques(g).size();
    for (std::size_t cap : {std::size_t{1}, total - 1, total, total + 1}) {
      const CliqueList list = enumerate_maximal_cliques(g, cap);
      EXPECT_EQ(list.complete, total <= cap);
      EXPECT_LE(list.cliques.size(), cap + 1);
    }
  }
}

TEST(MaxWeightCliqueTest, Examples) {
  const std::vector<double> k3{1, 2, 3};
  const WeightedClique a = max_weight_clique(gen::complete(3), k3, 3);
  EXPECT_EQ(a.vertices, (VertexSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(a.weight, 6);

  const Graph p4 = square(gen::path(4));
  const std::vector<double> tie{5, 1, 1, 5};
  const WeightedClique b = max_weight_clique(p4, tie, 4);
  EXPECT_EQ(b.vertices, (VertexSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(b.weight, 7);
  const std::vector<double> skew{1, 1, 1, 5};
  EXPECT_EQ(max_weight_clique(p4, skew, 4).vertices, (VertexSet{1, 2, 3}));

  const std::vector<double> unit(7, 1.0);
  const WeightedClique c = max_weight_clique(square(gen::cycle(7)), unit, 7);
  EXPECT_EQ(c.vertices, (VertexSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(c.weight, 3);
}

TEST(MaxWeightCliqueTest, CapExceededIsReported) {
  const std::vector<double> unit(6, 1.0);
  try {
    max_weight_clique(square(gen::cycle(6)), unit, 6);
    FAIL() << "expected a cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(MaxWeightCliqueTest, RejectsBadWeights) {
  const std::vector<double> short_weights{1, 2};
  EXPECT_THROW(max_weight_clique(gen::complete(3), short_weights, 3), Error);
}

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "graphroots/error.hpp"
#include "graphroots/oracle.hpp"
#include "graphroots/reduction.hpp"

using namespace graphroots;
using namespace graphroots::testing;

namespace {

SetSplittingInstance worked_instance() { return {5, {{1, 2, 3}, {2, 5}, {3, 4}, {1, 4}}}; }
SetSplittingInstance minimal_instance() { return {2, {{1}, {2}}}; }

// |E| summed class by class.
std::int64_t expected_edges(const SetSplittingInstance& ss) {
  const std::int64_t n = ss.ground_size;
  const std::int64_t m = static_cast<std::int64_t>(ss.subsets.size());
  std::int64_t tails = 0;
  for (const auto& d : ss.subsets) tails += 5 + static_cast<std::int64_t>(d.size());
  std::int64_t meets = 0;
  for (std::size_t j = 0; j < ss.subsets.size(); ++j) {
    for (std::size_t k = j + 1; k < ss.subsets.size(); ++k) {
      bool meet = false;
      for (int a : ss.subsets[j]) {
        for (int b : ss.subsets[k]) meet = meet || a == b;
      }
      meets += meet;
    }
  }
  const std::int64_t subset_class = 5 * m + n * m + meets;
  const std::int64_t element_class = 5 * n + n * (n - 1) / 2;
  return tails + subset_class + element_class + 8;
}

bool brute_satisfiable(const SetSplittingInstance& ss) {
  for (std::uint32_t mask = 0; mask < (1u << ss.ground_size); ++mask) {
    bool all = true;
    for (const auto& d : ss.subsets) {
      bool in1 = false;
      bool in2 = false;
      for (int e : d) ((mask >> (e - 1)) & 1u ? in1 : in2) = true;
      all = all && in1 && in2;
    }
    if (all) return true;
  }
  return false;
}

VertexSet outside_tail(const ReductionInstance& ri, const Graph& h, int j) {
  VertexSet out;
  for (Vertex w : h.neighbors(ri.subset(j))) {
    if (w != ri.tail(j, 1) && w != ri.tail(j, 2) && w != ri.tail(j, 3)) out.push_back(w);
  }
  return out;
}

VertexSet element_vertices(const ReductionInstance& ri, int j) {
  VertexSet out;
  for (int i : ri.source.subsets[j - 1]) out.push_back(ri.element(i));
  return out;
}

}  // namespace

TEST(BuildInstanceTest, WorkedInstanceShape) {
  const ReductionInstance ri = build_instance(worked_instance());
  EXPECT_EQ(ri.graph.num_vertices(), 26);
  EXPECT_EQ(ri.graph.num_edges(), 116);
  EXPECT_EQ(ri.graph.num_edges(), expected_edges(worked_instance()));
  auto d = [&](int j) { return ri.subset(j); };
  EXPECT_TRUE(ri.graph.has_edge(d(1), d(2)));
  EXPECT_TRUE(ri.graph.has_edge(d(1), d(3)));
  EXPECT_TRUE(ri.graph.has_edge(d(1), d(4)));
  EXPECT_TRUE(ri.graph.has_edge(d(3), d(4)));
  EXPECT_FALSE(ri.graph.has_edge(d(2), d(3)));
  EXPECT_FALSE(ri.graph.has_edge(d(2), d(4)));
  EXPECT_EQ(role_name(ri.roles[ri.tail(2, 3)]), "D2^3");
  EXPECT_EQ(role_name(ri.roles[ri.s1_prime()]), "S1'");
  EXPECT_EQ(role_name(ri.roles[ri.connector()]), "X");
  EXPECT_EQ(role_name(ri.roles[ri.element(5)]), "U5");
}

TEST(BuildInstanceTest, MinimalInstanceShape) {
  const ReductionInstance ri = build_instance(minimal_instance());
  EXPECT_EQ(ri.graph.num_vertices(), 15);
  EXPECT_EQ(ri.graph.num_edges(), 45);
  EXPECT_FALSE(ri.graph.has_edge(ri.subset(1), ri.subset(2)));
}

TEST(BuildInstanceTest, RejectsMalformedInstances) {
  EXPECT_THROW(build_instance({3, {{1}, {}}}), Error);
  EXPECT_THROW(build_instance({3, {{4}}}), Error);
  EXPECT_THROW(build_instance({3, {{0}}}), Error);
  EXPECT_THROW(build_instance({3, {{1, 1}}}), Error);
}

TEST(BuildInstanceTest, CountsMatchClosedForm) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    SetSplittingInstance ss;
    ss.ground_size = 1 + trial % 8;
    const int m = 1 + trial % 6;
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << ss.ground_size) - 1);
    for (int j = 0; j < m; ++j) {
      const std::uint32_t mask = pick(rng);
      std::vector<int> d;
      for (int i = 1; i <= ss.ground_size; ++i) {
        if ((mask >> (i - 1)) & 1u) d.push_back(i);
      }
      ss.subsets.push_back(d);
    }
    const ReductionInstance ri = build_instance(ss);
    EXPECT_EQ(ri.graph.num_vertices(), ss.ground_size + 4 * m + 5);
    EXPECT_EQ(ri.graph.num_edges(), expected_edges(ss));
  }
}

TEST(TailTest, ReductionTailsForceSubsetNeighbours) {
  const ReductionInstance ri = build_instance(worked_instance());
  for (int j = 1; j <= 4; ++j) {
    EXPECT_EQ(tail_forced_neighbors(ri.graph, ri.tail(j, 3), ri.tail(j, 2), ri.tail(j, 1),
                                    ri.subset(j)),
              element_vertices(ri, j));
  }
}

TEST(TailTest, AbstractPattern) {
  // Root: a-b-c-d with d adjacent to p, q.
  const Graph h = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  EXPECT_EQ(tail_forced_neighbors(square(h), 0, 1, 2, 3), (VertexSet{4, 5}));
}

TEST(TailTest, PatternMismatch) {
  const Graph k4 = make_graph(5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 3}});
  try {
    tail_forced_neighbors(k4, 0, 1, 2, 3);
    FAIL() << "expected a pattern mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPatternMismatch);
  }
}

TEST(ValidateSplittingTest, Examples) {
  EXPECT_TRUE(validate_splitting(worked_instance(), {{1, 3, 5}, {2, 4}}));
  EXPECT_FALSE(validate_splitting(worked_instance(), {{1, 2, 3, 4, 5}, {}}));
  EXPECT_FALSE(validate_splitting(worked_instance(), {{1, 3}, {2, 4}}));
  EXPECT_FALSE(validate_splitting(minimal_instance(), {{1}, {2}}));
  EXPECT_FALSE(validate_splitting(minimal_instance(), {{1, 2}, {}}));
}

TEST(ExtractPartitionTest, RejectsNonRoots) {
  const ReductionInstance ri = build_instance(worked_instance());
  try {
    extract_partition(ri, ri.graph);
    FAIL() << "expected NOT_A_ROOT";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotARoot);
  }
}

TEST(ExtractPartitionTest, EveryOracleRootOfTheWorkedInstanceSplits) {
  const ReductionInstance ri = build_instance(worked_instance());
  RootQuery q;
  q.g = ri.graph;
  q.limit = 20;
  const RootSearch s = find_roots(q);
  ASSERT_FALSE(s.roots.empty());
  for (const Graph& h : s.roots) {
    const Extraction ex = extract_partition(ri, h);
    EXPECT_TRUE(validate_splitting(ri.source, ex.partition));
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(outside_tail(ri, h, j), element_vertices(ri, j));
  }
}

TEST(ExtractPartitionTest, WorkedInstanceHasNoTriangleFreeRoot) {
  // The tail rule pins N_H(D_3) = {U_3, U_4, D_3^1}; U_1 then needs an edge to
  // U_3 or U_4, which closes a triangle through D_1 or D_4.
  const ReductionInstance ri = build_instance(worked_instance());
  RootQuery q;
  q.g = ri.graph;
  q.girth_exact = 4;
  const RootSearch s = find_roots(q);
  EXPECT_TRUE(s.exhausted);
  EXPECT_TRUE(s.roots.empty());
}

TEST(ExtractPartitionTest, MinimalInstanceHasNoRoot) {
  const ReductionInstance ri = build_instance(minimal_instance());
  for (std::optional<int> exact : {std::optional<int>(4), std::optional<int>()}) {
    RootQuery q;
    q.g = ri.graph;
    q.girth_exact = exact;
    const RootSearch s = find_roots(q);
    EXPECT_TRUE(s.exhausted);
    EXPECT_TRUE(s.roots.empty());
  }
}

TEST(ReductionTest, RootExistsExactlyForSatisfiableInstances) {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> d;
      for (int i = 1; i <= n; ++i) {
        if ((mask >> (i - 1)) & 1u) d.push_back(i);
      }
      subsets.push_back(d);
    }
    const int k = static_cast<int>(subsets.size());
    for (int m = 1; m <= 3; ++m) {
      std::vector<int> pick(m, 0);
      while (true) {
        SetSplittingInstance ss{n, {}};
        for (int p : pick) ss.subsets.push_back(subsets[p]);
        const ReductionInstance ri = build_instance(ss);
        RootQuery q;
        q.g = ri.graph;
        const RootSearch s = find_roots(q);
        ASSERT_NE(s.status, SearchStatus::kBudgetExceeded);
        EXPECT_EQ(!s.roots.empty(), brute_satisfiable(ss));
        for (const Graph& h : s.roots) {
          EXPECT_TRUE(validate_splitting(ss, extract_partition(ri, h).partition));
          for (int j = 1; j <= m; ++j) EXPECT_EQ(outside_tail(ri, h, j), element_vertices(ri, j));
        }
        ++checked;
        int p = m - 1;
        while (p >= 0 && pick[p] == k - 1) --p;
        if (p < 0) break;
        ++pick[p];
        for (int r = p + 1; r < m; ++r) pick[r] = pick[p];
      }
    }
  }
  EXPECT_EQ(checked, 956);
}

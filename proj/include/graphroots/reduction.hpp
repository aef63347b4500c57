#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphroots/graph.hpp"

namespace graphroots {

/// Ground set {1..ground_size}; every subset non-empty, 1-indexed elements.
struct SetSplittingInstance {
  int ground_size = 0;
  std::vector<std::vector<int>> subsets;
};

enum class RoleKind {
  kElement,     // U_i
  kSubset,      // D_j
  kTail1,       // D_j^1, attached to D_j
  kTail2,       // D_j^2
  kTail3,       // D_j^3, the degree-2 end of the tail
  kS1,
  kS1Prime,
  kS2,
  kS2Prime,
  kConnector,   // X
};

struct Role {
  RoleKind kind;
  int index = 0;  // i for elements, j for subsets and tails, 0 otherwise

  friend bool operator==(const Role&, const Role&) = default;
};

std::string role_name(const Role& role);  // "U1", "D2", "D2^3", "S1'", "X", ...

/// Vertex layout: U_1..U_n, D_1..D_m, then (D_j^1, D_j^2, D_j^3) per j, then
/// S1, S1', S2, S2', X. |V| = n + 4m + 5.
struct ReductionInstance {
  Graph graph;
  std::vector<Role> roles;
  SetSplittingInstance source;

  Vertex element(int i) const { return i - 1; }
  Vertex subset(int j) const { return source.ground_size + j - 1; }
  /// level in {1, 2, 3}
  Vertex tail(int j, int level) const {
    return source.ground_size + num_subsets() + 3 * (j - 1) + (level - 1);
  }
  Vertex s1() const { return source.ground_size + 4 * num_subsets(); }
  Vertex s1_prime() const { return s1() + 1; }
  Vertex s2() const { return s1() + 2; }
  Vertex s2_prime() const { return s1() + 3; }
  Vertex connector() const { return s1() + 4; }

  int num_subsets() const { return static_cast<int>(source.subsets.size()); }
};

/// Throws Error(kInvalidArgument) for empty subsets, repeated elements or
/// elements outside 1..ground_size.
ReductionInstance build_instance(const SetSplittingInstance& instance);

/// For a tail a-b-c hanging off d (N(a) = {b, c}, N(b) = {a, c, d}, cd an
/// edge), every square root gives d the neighbours N_g(c) \ {a, b, d} outside
/// the tail. Throws Error(kPatternMismatch) if the pattern does not hold.
VertexSet tail_forced_neighbors(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

struct Partition {
  std::vector<int> block1;  // sorted, 1-indexed
  std::vector<int> block2;
};

bool validate_splitting(const SetSplittingInstance& instance, const Partition& p);

enum class ExtractionStrategy {
  kNeighborsOfS1,
  kNeighborsOfS2,
  kNeighborsOfS1Prime,
  kNeighborsOfS2Prime,
  kDistanceToS1VersusS2,
  kExhaustive,
};

std::string_view to_string(ExtractionStrategy strategy);

struct Extraction {
  Partition partition;
  ExtractionStrategy strategy;
};

/// Reads a set splitting off any square root h of the instance graph. Tries,
/// in order: elements whose vertex is an h-neighbour of S1, S2, S1', S2'
/// (versus the rest), then elements closer in h to S1 than to S2; falls back to
/// exhaustive search for ground sets of at most 20 elements.
/// Throws Error(kNotARoot) if h is not a square root and
/// Error(kNoValidSplitting) if nothing validates.
Extraction extract_partition(const ReductionInstance& instance, const Graph& h);

}  // namespace graphroots

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "graphroots/graph.hpp"

namespace graphroots {

struct RootQuery {
  Graph g;
  /// At most one of girth_min / girth_exact may be set; both must be >= 3.
  std::optional<int> girth_min;
  std::optional<int> girth_exact;
  /// Cycle lengths (>= 3) the root must not contain, on top of the girth bound.
  std::vector<int> forbidden_cycles;
  /// Stop after this many roots; must be >= 1.
  std::size_t limit = 1;
  /// Search-node cap.
  std::uint64_t budget = 50'000'000;
  /// Pins N_H(v) = set for each entry; every set must lie inside N_g(v).
  std::vector<std::pair<Vertex, VertexSet>> fixed_neighborhoods;
  /// Off: only the constraint checks run, no forcing. For soundness tests.
  bool pruning = true;
};

enum class SearchStatus {
  kExhausted,       // every root is in the result
  kLimitReached,    // more than `limit` roots exist
  kBudgetExceeded,  // stopped at the node cap; results are partial
};

std::string_view to_string(SearchStatus status);

struct RootSearch {
  /// Sorted by canonical edge list.
  std::vector<Graph> roots;
  bool exhausted = false;
  SearchStatus status = SearchStatus::kExhausted;
  std::uint64_t nodes = 0;
};

/// Backtracking over the edges of g (every root is a spanning subgraph of g).
/// Branches on the smallest undecided edge, include first. Forcing rules:
///   - a g-edge with no possible common neighbour must be a root edge;
///   - a non-edge of g never gains a common root neighbour;
///   - a root edge that would close a forbidden cycle length is excluded;
///   - tails a-b-c hanging off d pin d's root neighbourhood;
///   - when cycles of length 3, 4 and 5 are all forbidden, N_H[v] is a maximal
///     clique of g whenever deg_H(v) >= 2.
/// Throws Error(kTooLarge) for more than 64 vertices and
/// Error(kInvalidArgument) for malformed queries.
RootSearch find_roots(const RootQuery& query);

struct GirthCensus {
  std::map<Girth, std::size_t> counts;
  bool exhausted = false;
};

/// Number of square roots of g per root girth.
GirthCensus count_roots_by_girth(const Graph& g, std::uint64_t budget);

}  // namespace graphroots

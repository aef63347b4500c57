#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphroots/graph.hpp"

namespace graphroots {

struct CliqueList {
  /// Each clique sorted; the list sorted lexicographically.
  std::vector<VertexSet> cliques;
  /// False iff enumeration stopped because more than `cap` cliques exist.
  bool complete = true;
};

/// Lists the maximal cliques of `g` with polynomial delay: vertices are added
/// one at a time and every maximal clique of the growing prefix graph has at
/// most two children, each reached from a unique parent. The search tree has
/// at most n nodes per reported clique, so stopping after `cap` + 1 leaves
/// bounds the total work by O(cap * n * m).
///
/// When the cap is exceeded the returned list holds the cliques found so far.
CliqueList enumerate_maximal_cliques(const Graph& g,
                                     std::optional<std::size_t> cap = std::nullopt);

struct WeightedClique {
  VertexSet vertices;
  double weight = 0;
};

/// Heaviest maximal clique; ties go to the lexicographically smallest vertex
/// set. Throws Error(kCapExceeded) when `g` has more than `cap` maximal
/// cliques, which rules out squares of girth-7 graphs when cap = n.
WeightedClique max_weight_clique(const Graph& g, std::span<const double> weights,
                                 std::size_t cap);

}  // namespace graphroots

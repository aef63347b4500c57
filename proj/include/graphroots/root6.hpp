#pragma once

#include <optional>
#include <span>
#include <vector>

#include "graphroots/graph.hpp"
#include "graphroots/root_result.hpp"

namespace graphroots {

struct PropagationResult {
  /// The unique {C3, C5}-free square root with the requested neighbourhood,
  /// if one exists.
  std::optional<Graph> root;
  /// BFS parent of every reached vertex; parent[v] == v for the seed and -1
  /// for vertices never reached.
  std::vector<Vertex> parent;
};

/// Square root with a specified neighbourhood N_H(v) = u_set. Neighbourhoods
/// spread outward from v: a vertex u reached from p gets
///   N_H(u) = N_G(u) ∩ (N_G[p] \ N_H(p)).
/// The result is accepted only if its square is g and it has no C3 and no C5.
/// Throws Error(kInvalidArgument) unless u_set is a non-empty subset of N_g(v).
PropagationResult root_with_neighborhood(const Graph& g, Vertex v,
                                         std::span<const Vertex> u_set);

/// Components of g[N(x) ∩ N(y)], each sorted, ordered by smallest vertex.
std::vector<VertexSet> common_neighborhood_components(const Graph& g, Vertex x, Vertex y);

/// Girth >= 6 root containing the edge xy. The common neighbourhood of x and y
/// splits into at most two components A, B, which are N_H(x) - y and
/// N_H(y) - x in some order; the candidates
///   (x, A+y), (x, B+y), (y, A+x), (y, B+x)
/// are tried in that order and the first C4-free result wins.
/// NO reasons: kC4Found if some candidate failed only the C4 filter,
/// kNoCandidate otherwise.
RootResult root_with_edge(const Graph& g, Vertex x, Vertex y);

/// Decides whether g is the square of a graph of girth >= 6: per component,
/// tries root_with_edge(x, y) for a minimum-degree vertex x and each neighbour y.
RootResult recognize_girth6(const Graph& g);

/// True iff h has no 3-cycle and no 5-cycle.
bool is_c3_c5_free(const Graph& h);

}  // namespace graphroots

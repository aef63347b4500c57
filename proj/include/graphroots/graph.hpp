#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace graphroots {

using Vertex = int;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Length of a shortest cycle. Forests have infinite girth, which compares
/// greater than every finite length.
class Girth {
 public:
  constexpr explicit Girth(int length) : value_(length) {}

  static constexpr Girth infinite() { return Girth(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  /// Precondition: finite.
  constexpr int length() const { return value_; }

  std::string to_string() const;

  friend constexpr bool operator==(Girth, Girth) = default;
  friend constexpr auto operator<=>(Girth, Girth) = default;
  friend constexpr bool operator==(Girth a, int b) { return a.value_ == b; }
  friend constexpr auto operator<=>(Girth a, int b) { return a.value_ <=> b; }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int value_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
/// kept sorted, so equality is edge-for-edge identity.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws Error(kInvalidArgument) on out-of-range endpoints, self-loops or
  /// duplicate edges.
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adj_;
  std::int64_t m_ = 0;
};

/// Mutable accumulator for graphs built by algorithms. Repeated edges are
/// merged; self-loops are ignored.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : adj_(n) {}

  void add_edge(Vertex u, Vertex v);
  int num_vertices() const { return static_cast<int>(adj_.size()); }
  Graph build() &&;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Subgraph induced by a vertex subset, with the map from new identifiers back
/// to the identifiers of the host graph.
struct InducedSubgraph {
  Graph graph;
  VertexSet to_original;
};

/// Graph in which uv is an edge iff 1 <= d_g(u, v) <= k. Throws on k < 1.
Graph power(const Graph& g, int k);

/// power(g, 2), computed by merging neighbor adjacency lists.
Graph square(const Graph& g);

/// Per-vertex BFS, O(n * m).
Girth girth(const Graph& g);

/// Components ordered by smallest member; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_bipartite(const Graph& g);

/// True iff no two distinct vertices have two common neighbors, i.e. g has no
/// 4-cycle as a subgraph (induced or not).
bool is_c4_free(const Graph& g);

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);

/// Maps a graph on the vertices of an induced subgraph back onto `n` host
/// vertices.
Graph lift(const Graph& sub, std::span<const Vertex> to_original, int n);

/// Edge union of graphs with the same vertex count.
Graph edge_union(std::span<const Graph> graphs);

/// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct IsomorphismOptions {
  int max_vertices = 64;
};

/// Exact decision by colour refinement with individualization and
/// backtracking. Throws Error(kTooLarge) past `max_vertices`.
bool is_isomorphic(const Graph& a, const Graph& b,
                   const IsomorphismOptions& options = {});

/// True iff square(h) equals g edge-for-edge on identical labels.
bool check_square_root(const Graph& h, const Graph& g);

}  // namespace graphroots

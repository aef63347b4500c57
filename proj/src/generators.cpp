#include "graphroots/generators.hpp"

#include <algorithm>
#include <queue>

#include "graphroots/error.hpp"

namespace graphroots::gen {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph petersen() {
  GraphBuilder builder(10);
  for (Vertex i = 0; i < 5; ++i) {
    builder.add_edge(i, (i + 1) % 5);
    builder.add_edge(i, i + 5);
    builder.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(builder).build();
}

Graph heawood() {
  // Points 0..6 and lines 7..13 of the Fano plane; line i holds i, i+1, i+3.
  GraphBuilder builder(14);
  for (Vertex i = 0; i < 7; ++i) {
    for (int shift : {0, 1, 3}) builder.add_edge(7 + i, (i + shift) % 7);
  }
  return std::move(builder).build();
}

Graph subdivision(const Graph& g) {
  const auto edges = g.edges();
  const int n = g.num_vertices();
  GraphBuilder builder(n + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex mid = n + static_cast<Vertex>(i);
    builder.add_edge(edges[i].u, mid);
    builder.add_edge(mid, edges[i].v);
  }
  return std::move(builder).build();
}

Graph spider(std::span<const int> leg_lengths) {
  int n = 1;
  for (int len : leg_lengths) n += len;
  GraphBuilder builder(n);
  Vertex next = 1;
  for (int len : leg_lengths) {
    Vertex prev = 0;
    for (int k = 0; k < len; ++k, ++next) {
      builder.add_edge(prev, next);
      prev = next;
    }
  }
  return std::move(builder).build();
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n <= 1) return Graph(std::max(n, 0));
  if (n == 2) return path(2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  GraphBuilder builder(n);
  for (int s : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    builder.add_edge(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  const int a = leaves.top();
  leaves.pop();
  builder.add_edge(a, leaves.top());
  return std::move(builder).build();
}

Graph random_graph_with_girth(int n, int extra, int min_girth, std::mt19937_64& rng) {
  Graph g = random_tree(n, rng);
  if (n < 3) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < extra; ++k) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || g.has_edge(a, b)) continue;
    // New cycle length is d(a, b) + 1.
    const int d = bfs_distances(g, a)[b];
    if (d + 1 < min_girth) continue;
    auto edges = g.edges();
    edges.push_back({std::min(a, b), std::max(a, b)});
    g = Graph(n, edges);
  }
  return g;
}

Graph gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  GraphBuilder builder(g.num_vertices());
  for (const Edge& e : g.edges()) builder.add_edge(perm[e.u], perm[e.v]);
  return std::move(builder).build();
}

}  // namespace graphroots::gen

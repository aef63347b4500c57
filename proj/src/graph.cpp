#include "graphroots/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "graphroots/error.hpp"

namespace graphroots {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kPatternMismatch: return "PATTERN_MISMATCH";
    case ErrorCode::kNotARoot: return "NOT_A_ROOT";
    case ErrorCode::kNoValidSplitting: return "NO_VALID_SPLITTING";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
  }
  return "UNKNOWN";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") + ": " +
                message),
      line_(line),
      column_(column),
      detail_(message) {}

std::string Girth::to_string() const {
  return is_infinite() ? "inf" : std::to_string(value_);
}

Graph::Graph(int n) : adj_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                      " out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
    }
  }
  m_ = static_cast<std::int64_t>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& nbrs : adj_) best = std::min(best, static_cast<int>(nbrs.size()));
  return adj_.empty() ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

Graph GraphBuilder::build() && {
  Graph g;
  std::int64_t twice_m = 0;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_m += static_cast<std::int64_t>(nbrs.size());
  }
  g.adj_ = std::move(adj_);
  g.m_ = twice_m / 2;
  return g;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "power requires k >= 1");
  if (k == 2) return square(g);
  const int n = g.num_vertices();
  GraphBuilder b(n);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> frontier;
  std::vector<Vertex> touched;
  for (Vertex s = 0; s < n; ++s) {
    dist[s] = 0;
    touched.assign(1, s);
    frontier.assign(1, s);
    for (int depth = 1; depth <= k && !frontier.empty(); ++depth) {
      std::vector<Vertex> next;
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] >= 0) continue;
          dist[w] = depth;
          touched.push_back(w);
          next.push_back(w);
          if (s < w) b.add_edge(s, w);
        }
      }
      frontier = std::move(next);
    }
    for (Vertex t : touched) dist[t] = -1;
  }
  return std::move(b).build();
}

Graph square(const Graph& g) {
  const int n = g.num_vertices();
  GraphBuilder b(n);
  std::vector<Vertex> mark(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    mark[v] = v;
    for (Vertex u : g.neighbors(v)) {
      if (mark[u] != v) {
        mark[u] = v;
        if (v < u) b.add_edge(v, u);
      }
      for (Vertex w : g.neighbors(u)) {
        if (mark[w] != v) {
          mark[w] = v;
          if (v < w) b.add_edge(v, w);
        }
      }
    }
  }
  return std::move(b).build();
}

Girth girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  for (Vertex s = 0; s < n; ++s) {
    order.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex u = order[head];
      // Any cycle found from here on is at least 2 * dist[u] + 1 long.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          order.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (Vertex t : order) {
      dist[t] = -1;
      parent[t] = -1;
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth(best);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

bool is_complete(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

bool is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_c4_free(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> common(n, 0);
  std::vector<Vertex> touched;
  for (Vertex a = 0; a < n; ++a) {
    touched.clear();
    bool found = false;
    for (Vertex u : g.neighbors(a)) {
      for (Vertex b : g.neighbors(u)) {
        if (b <= a) continue;
        if (common[b]++ == 0) touched.push_back(b);
        if (common[b] >= 2) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    for (Vertex t : touched) common[t] = 0;
    if (found) return false;
  }
  return true;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidArgument, "induced: vertex out of range");
    }
    local[keep[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (local[w] > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), local[w]);
    }
  }
  return {std::move(b).build(), std::move(keep)};
}

Graph lift(const Graph& sub, std::span<const Vertex> to_original, int n) {
  GraphBuilder b(n);
  for (const Edge& e : sub.edges()) b.add_edge(to_original[e.u], to_original[e.v]);
  return std::move(b).build();
}

Graph edge_union(std::span<const Graph> graphs) {
  if (graphs.empty()) return Graph(0);
  GraphBuilder b(graphs.front().num_vertices());
  for (const Graph& g : graphs) {
    if (g.num_vertices() != b.num_vertices()) {
      throw Error(ErrorCode::kInvalidArgument, "edge_union: vertex counts differ");
    }
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  }
  return std::move(b).build();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool check_square_root(const Graph& h, const Graph& g) {
  return h.num_vertices() == g.num_vertices() && square(h) == g;
}

}  // namespace graphroots

#include "brute_force.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace graphroots::testing {

Matrix to_matrix(const Graph& g) {
  const int n = g.num_vertices();
  Matrix a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

Graph from_matrix(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (a[u][v]) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph bf_power(const Graph& g, int k) {
  const int n = g.num_vertices();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  const Matrix a = to_matrix(g);
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (a[u][v]) d[u][v] = 1;
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    }
  }
  Matrix p(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) p[u][v] = u != v && d[u][v] <= k;
  }
  return from_matrix(p);
}

std::optional<int> bf_girth(const Graph& g) {
  const int n = g.num_vertices();
  const Matrix a = to_matrix(g);
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!a[u][v]) continue;
      std::vector<int> dist(n, -1);
      std::deque<int> queue{u};
      dist[u] = 0;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y = 0; y < n; ++y) {
          if (!a[x][y] || dist[y] >= 0 || (x == u && y == v)) continue;
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
      if (dist[v] > 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
  }
  return best;
}

bool bf_has_c4(const Graph& g) {
  const int n = g.num_vertices();
  const Matrix a = to_matrix(g);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (p == q || p == r || p == s || q == r || q == s || r == s) continue;
          if (a[p][q] && a[q][r] && a[r][s] && a[s][p]) return true;
        }
      }
    }
  }
  return false;
}

std::vector<VertexSet> bf_maximal_cliques(const Graph& g) {
  const int n = g.num_vertices();
  const Matrix a = to_matrix(g);
  const std::uint32_t full = 1u << n;
  std::vector<bool> clique(full, false);
  clique[0] = true;
  for (std::uint32_t s = 1; s < full; ++s) {
    const int top = 31 - __builtin_clz(s);
    const std::uint32_t rest = s & ~(1u << top);
    bool ok = clique[rest];
    for (int v = 0; v < top && ok; ++v) {
      if ((rest >> v & 1u) && !a[v][top]) ok = false;
    }
    clique[s] = ok;
  }
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (!clique[s]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1u) && clique[s | (1u << v)]) maximal = false;
    }
    if (!maximal) continue;
    VertexSet set;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1u) set.push_back(v);
    }
    out.push_back(set);
  }
  if (n == 0) return out;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> bf_forced_edges(const Graph& g) {
  const auto cliques = bf_maximal_cliques(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    int count = 0;
    for (const auto& q : cliques) {
      const bool has_u = std::find(q.begin(), q.end(), e.u) != q.end();
      const bool has_v = std::find(q.begin(), q.end(), e.v) != q.end();
      count += has_u && has_v;
    }
    if (count >= 2) out.push_back(e);
  }
  return out;
}

bool bf_has_cycle_of_length(const Graph& g, int length) {
  const int n = g.num_vertices();
  const Matrix a = to_matrix(g);
  std::vector<bool> used(n, false);
  // Cycles are rooted at their smallest vertex.
  std::function<bool(int, int, int)> walk = [&](int start, int x, int depth) {
    if (depth == length) return a[x][start];
    for (int y = start + 1; y < n; ++y) {
      if (!a[x][y] || used[y]) continue;
      used[y] = true;
      const bool found = walk(start, y, depth + 1);
      used[y] = false;
      if (found) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    const bool found = walk(s, s, 1);
    used[s] = false;
    if (found) return true;
  }
  return false;
}

bool bf_is_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const Matrix ma = to_matrix(a);
  const Matrix mb = to_matrix(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u) {
      for (int v = u + 1; v < n && same; ++v) same = ma[u][v] == mb[perm[u]][perm[v]];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> bf_square_roots(const Graph& g,
                                   const std::function<bool(const Graph&)>& accept) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.num_vertices();
  const Matrix target = to_matrix(g);
  std::vector<Graph> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::vector<Edge> chosen;
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1u) chosen.push_back(edges[i]);
    }
    Graph h(n, chosen);
    if (to_matrix(bf_power(h, 2)) == target && accept(h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
  return out;
}

namespace {

// Orders consistent with non-increasing degree: permute within degree classes.
void for_each_degree_order(const Graph& g, const std::function<void(const std::vector<int>&)>& f) {
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      f(order);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
}

std::vector<Graph> extend_by_one(const std::vector<Graph>& smaller, int n, bool connected_only) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& base : smaller) {
    const auto base_edges = base.edges();
    for (std::uint32_t s = connected_only ? 1u : 0u; s < (1u << (n - 1)); ++s) {
      std::vector<Edge> edges = base_edges;
      for (int v = 0; v < n - 1; ++v) {
        if (s >> v & 1u) edges.push_back({v, n - 1});
      }
      Graph g(n, edges);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  const Matrix a = to_matrix(g);
  std::uint64_t best = 0;
  for_each_degree_order(g, [&](const std::vector<int>& order) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (a[order[i]][order[j]] ? 1u : 0u);
    }
    best = std::max(best, code);
  });
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) level = extend_by_one(level, k, true);
  return level;
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> level{Graph(1)};
  if (n == 0) return {Graph(0)};
  for (int k = 2; k <= n; ++k) level = extend_by_one(level, k, false);
  return level;
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace graphroots::testing

#include "graphroots/root6.hpp"

#include <algorithm>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "graphroots/error.hpp"
#include "per_component.hpp"

namespace graphroots {
namespace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

std::vector<Bitset> adjacency_bits(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Bitset> adj(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].set(w);
  }
  return adj;
}

VertexSet with(VertexSet set, Vertex extra) {
  set.insert(std::lower_bound(set.begin(), set.end(), extra), extra);
  return set;
}

RootResult girth6_component(const Graph& g) {
  const int n = g.num_vertices();
  Vertex x = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(x)) x = v;
  }
  bool c4_seen = false;
  for (Vertex y : g.neighbors(x)) {
    RootResult r = root_with_edge(g, x, y);
    if (r.yes()) return r;
    c4_seen = c4_seen || r.reason == Reason::kC4Found;
  }
  return RootResult::reject(c4_seen ? Reason::kC4Found : Reason::kNoCandidate);
}

}  // namespace

bool is_c3_c5_free(const Graph& h) {
  const auto adj = adjacency_bits(h);
  for (const Edge& e : h.edges()) {
    if ((adj[e.u] & adj[e.v]).any()) return false;
  }
  // Triangle-free from here on, so every 5-cycle a-b-e-d-c is induced and
  // consists of an edge ab plus a 2-path between c in N(a) and e in N(b).
  for (const Edge& e : h.edges()) {
    for (Vertex c : h.neighbors(e.u)) {
      if (c == e.v) continue;
      for (Vertex f : h.neighbors(e.v)) {
        if (f == e.u || f == c) continue;
        Bitset mid = adj[c] & adj[f];
        mid.reset(e.u);
        mid.reset(e.v);
        if (mid.any()) return false;
      }
    }
  }
  return true;
}

PropagationResult root_with_neighborhood(const Graph& g, Vertex v,
                                         std::span<const Vertex> u_set) {
  const int n = g.num_vertices();
  if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  if (u_set.empty()) throw Error(ErrorCode::kInvalidArgument, "neighbourhood must be non-empty");
  for (std::size_t i = 0; i < u_set.size(); ++i) {
    if (u_set[i] < 0 || u_set[i] >= n || !g.has_edge(v, u_set[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(u_set[i]) + " is not a neighbour of " +
                      std::to_string(v));
    }
    if (i > 0 && u_set[i] <= u_set[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "neighbourhood must be sorted and distinct");
    }
  }

  const auto g_adj = adjacency_bits(g);
  std::vector<Bitset> h_adj(n, Bitset(n));
  auto add = [&](Vertex a, Vertex b) {
    h_adj[a].set(b);
    h_adj[b].set(a);
  };

  PropagationResult out;
  out.parent.assign(n, -1);
  out.parent[v] = v;
  std::vector<Vertex> queue;
  for (Vertex u : u_set) {
    add(v, u);
    out.parent[u] = v;
    queue.push_back(u);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Vertex p = out.parent[u];
    // W = N_G(u) ∩ (N_G[p] \ N_H(p)); p itself is in W but u-p is already in H.
    Bitset w_set = g_adj[u] & g_adj[p];
    w_set -= h_adj[p];
    for (auto w = w_set.find_first(); w != Bitset::npos; w = w_set.find_next(w)) {
      const auto wv = static_cast<Vertex>(w);
      add(u, wv);
      if (out.parent[wv] < 0) {
        out.parent[wv] = u;
        queue.push_back(wv);
      }
    }
  }

  GraphBuilder b(n);
  for (Vertex a = 0; a < n; ++a) {
    for (auto w = h_adj[a].find_next(a); w != Bitset::npos; w = h_adj[a].find_next(w)) {
      b.add_edge(a, static_cast<Vertex>(w));
    }
  }
  Graph h = std::move(b).build();
  if (check_square_root(h, g) && is_c3_c5_free(h)) out.root = std::move(h);
  return out;
}

std::vector<VertexSet> common_neighborhood_components(const Graph& g, Vertex x, Vertex y) {
  VertexSet common;
  std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(),
                        g.neighbors(y).begin(), g.neighbors(y).end(),
                        std::back_inserter(common));
  InducedSubgraph sub = induced(g, common);
  std::vector<VertexSet> comps;
  for (const VertexSet& local : connected_components(sub.graph)) {
    VertexSet comp;
    for (Vertex v : local) comp.push_back(sub.to_original[v]);
    comps.push_back(std::move(comp));
  }
  return comps;
}

RootResult root_with_edge(const Graph& g, Vertex x, Vertex y) {
  const int n = g.num_vertices();
  if (x < 0 || y < 0 || x >= n || y >= n || !g.has_edge(x, y)) {
    throw Error(ErrorCode::kInvalidArgument, "root_with_edge: xy must be an edge");
  }
  if (n <= 2) return RootResult::accept(g);

  const auto comps = common_neighborhood_components(g, x, y);
  if (comps.size() > 2) return RootResult::reject(Reason::kNoCandidate);

  std::vector<std::pair<Vertex, VertexSet>> candidates;
  if (comps.empty()) {
    candidates = {{x, {y}}, {y, {x}}};
  } else if (comps.size() == 1) {
    candidates = {{x, with(comps[0], y)}, {y, with(comps[0], x)}};
  } else {
    const VertexSet& a = comps[0];
    const VertexSet& b = comps[1];
    candidates = {{x, with(a, y)}, {x, with(b, y)}, {y, with(a, x)}, {y, with(b, x)}};
  }

  bool c4_seen = false;
  for (const auto& [v, u_set] : candidates) {
    PropagationResult r = root_with_neighborhood(g, v, u_set);
    if (!r.root) continue;
    if (is_c4_free(*r.root)) return RootResult::accept(std::move(*r.root));
    c4_seen = true;
  }
  return RootResult::reject(c4_seen ? Reason::kC4Found : Reason::kNoCandidate);
}

RootResult recognize_girth6(const Graph& g) {
  return detail::solve_per_component(g, girth6_component,
                                     [](const Graph& root) { return girth(root) >= 6; });
}

}  // namespace graphroots

#include "graphroots/root7.hpp"

#include <algorithm>
#include <unordered_map>

#include "graphroots/error.hpp"
#include "per_component.hpp"

namespace graphroots {
namespace {

std::int64_t edge_key(Vertex u, Vertex v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(u) * n + v;
}

std::vector<bool> support_mask(const ForcedSubgraph& fs, int n) {
  std::vector<bool> mask(n, false);
  for (Vertex v : fs.support) mask[v] = true;
  return mask;
}

VertexSet meet_support(const VertexSet& clique, const std::vector<bool>& in_support) {
  VertexSet out;
  for (Vertex v : clique) {
    if (in_support[v]) out.push_back(v);
  }
  return out;
}

// Centre of the star F[s], or -1 if F[s] is not a star.
Vertex star_center(const Graph& f, const VertexSet& s, std::vector<int>& mark, int stamp) {
  if (s.size() < 2) return -1;
  for (Vertex v : s) mark[v] = stamp;
  std::int64_t twice_edges = 0;
  Vertex center = -1;
  for (Vertex v : s) {
    int inner = 0;
    for (Vertex w : f.neighbors(v)) {
      if (mark[w] == stamp) ++inner;
    }
    twice_edges += inner;
    if (inner == static_cast<int>(s.size()) - 1 && center < 0) center = v;
  }
  if (center < 0 || twice_edges != 2 * static_cast<std::int64_t>(s.size() - 1)) return -1;
  return center;
}

Reason reason_for(Condition c) {
  switch (c) {
    case Condition::kI: return Reason::kCondI;
    case Condition::kII: return Reason::kCondII;
    case Condition::kIII: return Reason::kCondIII;
    case Condition::kIV: return Reason::kCondIV;
    default: return Reason::kCondV;
  }
}

RootResult recognize_component(const Graph& g, RootFamily family) {
  const int n = g.num_vertices();
  CliqueList cliques = enumerate_maximal_cliques(g, static_cast<std::size_t>(n));
  if (!cliques.complete) return RootResult::reject(Reason::kTooManyCliques);
  ForcedSubgraph fs = forced_edges(g, cliques);
  const Condition c = check_conditions(g, cliques, fs, family);
  if (c != Condition::kOk) return RootResult::reject(reason_for(c));
  return RootResult::accept(reconstruct_root7(g, cliques, fs));
}

}  // namespace

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::kOk: return "OK";
    case Condition::kI: return "COND_I";
    case Condition::kII: return "COND_II";
    case Condition::kIII: return "COND_III";
    case Condition::kIV: return "COND_IV";
    case Condition::kV: return "COND_V";
  }
  return "UNKNOWN";
}

ForcedSubgraph forced_edges(const Graph& g, const CliqueList& cliques) {
  if (!cliques.complete) {
    throw Error(ErrorCode::kInvalidArgument, "forced_edges needs a complete clique list");
  }
  const int n = g.num_vertices();
  std::unordered_map<std::int64_t, std::vector<int>> containing;
  for (std::size_t q = 0; q < cliques.cliques.size(); ++q) {
    const VertexSet& clique = cliques.cliques[q];
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        containing[edge_key(clique[i], clique[j], n)].push_back(static_cast<int>(q));
      }
    }
  }
  std::vector<std::pair<Edge, std::vector<int>>> forced;
  for (auto& [key, ids] : containing) {
    if (ids.size() < 2) continue;
    const Edge e{static_cast<Vertex>(key / n), static_cast<Vertex>(key % n)};
    forced.emplace_back(e, std::move(ids));
  }
  std::sort(forced.begin(), forced.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  ForcedSubgraph fs;
  for (auto& [e, ids] : forced) {
    fs.edges.push_back(e);
    fs.incidence.push_back(std::move(ids));
  }
  fs.forced = Graph(n, fs.edges);
  for (Vertex v = 0; v < n; ++v) {
    if (fs.forced.degree(v) > 0) fs.support.push_back(v);
  }
  return fs;
}

Condition check_conditions(const Graph& g, const CliqueList& cliques,
                           const ForcedSubgraph& fs, RootFamily family) {
  const int n = g.num_vertices();
  const Graph& f = fs.forced;
  const std::vector<bool> in_support = support_mask(fs, n);

  std::vector<int> membership(n, 0);
  for (const VertexSet& clique : cliques.cliques) {
    for (Vertex v : clique) ++membership[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!in_support[v] && membership[v] != 1) return Condition::kI;
  }

  for (const auto& ids : fs.incidence) {
    if (ids.size() != 2) return Condition::kII;
  }

  // Two forced edges va, vb share a maximal clique iff {v, a, b} is a clique.
  for (Vertex v : fs.support) {
    auto nbrs = f.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) return Condition::kIII;
      }
    }
  }

  std::vector<int> mark(n, -1);
  for (std::size_t q = 0; q < cliques.cliques.size(); ++q) {
    const VertexSet s = meet_support(cliques.cliques[q], in_support);
    if (star_center(f, s, mark, static_cast<int>(q)) < 0) return Condition::kIV;
  }

  if (fs.support.empty()) return Condition::kV;
  int components_with_edges = 0;
  for (const VertexSet& comp : connected_components(f)) {
    if (comp.size() > 1) ++components_with_edges;
  }
  if (components_with_edges != 1) return Condition::kV;
  if (girth(f) < 7) return Condition::kV;
  if (family == RootFamily::kBipartiteC4C6Free && !is_bipartite(f)) return Condition::kV;
  return Condition::kOk;
}

Graph reconstruct_root7(const Graph& g, const CliqueList& cliques, const ForcedSubgraph& fs) {
  const int n = g.num_vertices();
  const auto& list = cliques.cliques;
  const std::vector<bool> in_support = support_mask(fs, n);

  std::vector<VertexSet> meets;
  meets.reserve(list.size());
  for (const VertexSet& clique : list) meets.push_back(meet_support(clique, in_support));

  std::vector<Vertex> center(list.size(), -1);
  std::vector<int> mark(n, -1);
  for (std::size_t q = 0; q < list.size(); ++q) {
    if (meets[q].size() >= 3) {
      center[q] = star_center(fs.forced, meets[q], mark, static_cast<int>(q));
    }
  }

  // Two-vertex stars take the centre opposite to the larger clique through
  // the same forced edge; two small cliques sharing an edge stay ambiguous.
  struct Ambiguous {
    std::size_t low, high;
    Vertex x, y;
  };
  std::vector<Ambiguous> ambiguous;
  for (std::size_t q = 0; q < list.size(); ++q) {
    if (meets[q].size() != 2) continue;
    const Vertex x = meets[q][0];
    const Vertex y = meets[q][1];
    auto it = std::lower_bound(fs.edges.begin(), fs.edges.end(), Edge{x, y});
    std::size_t other = q;
    if (it != fs.edges.end() && *it == Edge{x, y}) {
      for (int id : fs.incidence[it - fs.edges.begin()]) {
        if (static_cast<std::size_t>(id) != q) other = static_cast<std::size_t>(id);
      }
    }
    if (other != q && meets[other].size() >= 3) {
      center[q] = center[other] == x ? y : x;
    } else if (other > q) {
      ambiguous.push_back({q, other, x, y});
    } else if (other == q) {
      center[q] = x;
    }
  }

  auto build = [&](bool swapped) {
    std::vector<Vertex> centers = center;
    for (const Ambiguous& a : ambiguous) {
      centers[a.low] = swapped ? a.y : a.x;
      centers[a.high] = swapped ? a.x : a.y;
    }
    GraphBuilder b(n);
    for (std::size_t q = 0; q < list.size(); ++q) {
      const Vertex c = centers[q] >= 0 ? centers[q] : list[q].front();
      for (Vertex v : list[q]) b.add_edge(c, v);
    }
    return std::move(b).build();
  };

  Graph first = build(false);
  if (ambiguous.empty() || check_square_root(first, g)) return first;
  Graph second = build(true);
  return check_square_root(second, g) ? second : first;
}

RootResult recognize_root7(const Graph& g) {
  return detail::solve_per_component(
      g, [](const Graph& c) { return recognize_component(c, RootFamily::kGirthAtLeast7); },
      [](const Graph& root) { return girth(root) >= 7; });
}

RootResult recognize_bipartite_c4c6free(const Graph& g) {
  return detail::solve_per_component(
      g,
      [](const Graph& c) { return recognize_component(c, RootFamily::kBipartiteC4C6Free); },
      // A bipartite graph has even girth, so girth >= 7 means no C4 and no C6.
      [](const Graph& root) { return is_bipartite(root) && girth(root) >= 7; });
}

}  // namespace graphroots

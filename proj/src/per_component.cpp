#include "per_component.hpp"

#include <vector>

namespace graphroots {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kYes ? "YES" : "NO";
}

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::kTooManyCliques: return "TOO_MANY_CLIQUES";
    case Reason::kCondI: return "COND_I";
    case Reason::kCondII: return "COND_II";
    case Reason::kCondIII: return "COND_III";
    case Reason::kCondIV: return "COND_IV";
    case Reason::kCondV: return "COND_V";
    case Reason::kSquareCheckFailed: return "SQUARE_CHECK_FAILED";
    case Reason::kC4Found: return "C4_FOUND";
    case Reason::kNoCandidate: return "NO_CANDIDATE";
  }
  return "UNKNOWN";
}

RootResult RootResult::accept(Graph root) {
  RootResult r;
  r.verdict = Verdict::kYes;
  r.root_girth = girth(root);
  r.root = std::move(root);
  return r;
}

RootResult RootResult::reject(Reason why) {
  RootResult r;
  r.reason = why;
  return r;
}

namespace detail {

Graph star_root(int n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

RootResult solve_per_component(const Graph& g,
                               const std::function<RootResult(const Graph&)>& solve,
                               const std::function<bool(const Graph&)>& acceptable) {
  const int n = g.num_vertices();
  std::vector<Graph> parts;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    InducedSubgraph sub = induced(g, comp);
    Graph local_root;
    if (is_complete(sub.graph)) {
      local_root = star_root(sub.graph.num_vertices());
    } else {
      RootResult r = solve(sub.graph);
      if (!r.yes()) return r;
      local_root = std::move(*r.root);
    }
    parts.push_back(lift(local_root, sub.to_original, n));
  }
  Graph root = parts.empty() ? Graph(n) : edge_union(parts);
  if (!check_square_root(root, g) || !acceptable(root)) {
    return RootResult::reject(Reason::kSquareCheckFailed);
  }
  return RootResult::accept(std::move(root));
}

}  // namespace detail
}  // namespace graphroots

#include "graphroots/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "graphroots/error.hpp"

namespace graphroots {
namespace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Node {
  int level;      // clique is maximal in the graph induced by 0..level-1
  Bitset clique;
};

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace

CliqueList enumerate_maximal_cliques(const Graph& g, std::optional<std::size_t> cap) {
  const int n = g.num_vertices();
  CliqueList result;
  if (n == 0) return result;

  std::vector<Bitset> adj(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].set(w);
  }

  std::vector<Node> stack;
  stack.push_back({0, Bitset(n)});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const int i = node.level;
    if (i == n) {
      result.cliques.push_back(to_vertex_set(node.clique));
      if (cap && result.cliques.size() > *cap) {
        result.complete = false;
        break;
      }
      continue;
    }
    const Vertex v = i;

    if (node.clique.is_subset_of(adj[v])) {
      node.clique.set(v);
      stack.push_back({i + 1, std::move(node.clique)});
      continue;
    }

    // K stays maximal after v arrives. The second candidate (K ∩ N(v)) + v is
    // a child only if it is maximal in G[0..i] and K is its canonical parent,
    // the greedy lowest-index extension of K ∩ N(v) inside G[0..i-1].
    Bitset core = node.clique & adj[v];
    // Only bits below i matter in `common` and `candidates`.
    Bitset candidates(n);
    candidates.set();
    for (auto c = core.find_first(); c != Bitset::npos; c = core.find_next(c)) {
      candidates &= adj[c];
    }
    const Bitset common = candidates & adj[v];
    bool second_child = common.find_first() >= static_cast<std::size_t>(i);
    if (second_child) {
      Bitset extension = core;
      for (auto w = candidates.find_first(); w < static_cast<std::size_t>(i);
           w = candidates.find_next(w)) {
        extension.set(w);
        candidates &= adj[w];
      }
      second_child = extension == node.clique;
    }
    if (second_child) {
      core.set(v);
      stack.push_back({i + 1, std::move(core)});
    }
    stack.push_back({i + 1, std::move(node.clique)});
  }
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

WeightedClique max_weight_clique(const Graph& g, std::span<const double> weights,
                                 std::size_t cap) {
  const int n = g.num_vertices();
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "max_weight_clique: one weight per vertex");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "max_weight_clique: weights must be finite and nonnegative");
    }
  }
  CliqueList list = enumerate_maximal_cliques(g, cap);
  if (!list.complete) {
    throw Error(ErrorCode::kCapExceeded,
                "more than " + std::to_string(cap) +
                    " maximal cliques: not a girth-7 square candidate");
  }
  WeightedClique best;
  bool have = false;
  for (auto& clique : list.cliques) {
    double total = 0;
    for (Vertex v : clique) total += weights[v];
    // The list is sorted, so strict improvement keeps the lexicographic tie-break.
    if (!have || total > best.weight) {
      best = {clique, total};
      have = true;
    }
  }
  return best;
}

}  // namespace graphroots

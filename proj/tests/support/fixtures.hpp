#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "graphroots/graph.hpp"

namespace graphroots::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({std::min(u, v), std::max(u, v)});
  return Graph(n, edges);
}

inline std::vector<Edge> edge_list(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

}  // namespace graphroots::testing

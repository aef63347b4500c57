#include "graphroots/reduction.hpp"

#include <algorithm>
#include <optional>

#include "graphroots/error.hpp"

namespace graphroots {
namespace {

Partition split_by(int n, const std::vector<bool>& first) {
  Partition p;
  for (int i = 1; i <= n; ++i) (first[i] ? p.block1 : p.block2).push_back(i);
  return p;
}

Partition neighbors_split(const ReductionInstance& ri, const Graph& h, Vertex s) {
  const int n = ri.source.ground_size;
  std::vector<bool> first(n + 1, false);
  for (int i = 1; i <= n; ++i) first[i] = h.has_edge(ri.element(i), s);
  return split_by(n, first);
}

Partition distance_split(const ReductionInstance& ri, const Graph& h) {
  const int n = ri.source.ground_size;
  const auto d1 = bfs_distances(h, ri.s1());
  const auto d2 = bfs_distances(h, ri.s2());
  auto key = [](int d) { return d < 0 ? std::numeric_limits<int>::max() : d; };
  std::vector<bool> first(n + 1, false);
  for (int i = 1; i <= n; ++i) first[i] = key(d1[ri.element(i)]) < key(d2[ri.element(i)]);
  return split_by(n, first);
}

}  // namespace

std::string role_name(const Role& role) {
  const std::string idx = std::to_string(role.index);
  switch (role.kind) {
    case RoleKind::kElement: return "U" + idx;
    case RoleKind::kSubset: return "D" + idx;
    case RoleKind::kTail1: return "D" + idx + "^1";
    case RoleKind::kTail2: return "D" + idx + "^2";
    case RoleKind::kTail3: return "D" + idx + "^3";
    case RoleKind::kS1: return "S1";
    case RoleKind::kS1Prime: return "S1'";
    case RoleKind::kS2: return "S2";
    case RoleKind::kS2Prime: return "S2'";
    case RoleKind::kConnector: return "X";
  }
  return "?";
}

std::string_view to_string(ExtractionStrategy strategy) {
  switch (strategy) {
    case ExtractionStrategy::kNeighborsOfS1: return "neighbors-of-S1";
    case ExtractionStrategy::kNeighborsOfS2: return "neighbors-of-S2";
    case ExtractionStrategy::kNeighborsOfS1Prime: return "neighbors-of-S1'";
    case ExtractionStrategy::kNeighborsOfS2Prime: return "neighbors-of-S2'";
    case ExtractionStrategy::kDistanceToS1VersusS2: return "distance-S1-vs-S2";
    case ExtractionStrategy::kExhaustive: return "exhaustive";
  }
  return "?";
}

ReductionInstance build_instance(const SetSplittingInstance& instance) {
  const int n = instance.ground_size;
  const int m = static_cast<int>(instance.subsets.size());
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative ground set size");

  std::vector<std::vector<bool>> member(m, std::vector<bool>(n + 1, false));
  for (int j = 0; j < m; ++j) {
    const auto& subset = instance.subsets[j];
    if (subset.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "subset " + std::to_string(j + 1) + " is empty");
    }
    for (int e : subset) {
      if (e < 1 || e > n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "element " + std::to_string(e) + " outside the ground set");
      }
      if (member[j][e]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "element " + std::to_string(e) + " repeated in subset " +
                        std::to_string(j + 1));
      }
      member[j][e] = true;
    }
  }

  ReductionInstance ri;
  ri.source = instance;
  for (auto& subset : ri.source.subsets) std::sort(subset.begin(), subset.end());
  const int total = n + 4 * m + 5;
  ri.roles.resize(total, Role{RoleKind::kConnector, 0});
  for (int i = 1; i <= n; ++i) ri.roles[ri.element(i)] = {RoleKind::kElement, i};
  for (int j = 1; j <= m; ++j) {
    ri.roles[ri.subset(j)] = {RoleKind::kSubset, j};
    ri.roles[ri.tail(j, 1)] = {RoleKind::kTail1, j};
    ri.roles[ri.tail(j, 2)] = {RoleKind::kTail2, j};
    ri.roles[ri.tail(j, 3)] = {RoleKind::kTail3, j};
  }
  ri.roles[ri.s1()] = {RoleKind::kS1, 0};
  ri.roles[ri.s1_prime()] = {RoleKind::kS1Prime, 0};
  ri.roles[ri.s2()] = {RoleKind::kS2, 0};
  ri.roles[ri.s2_prime()] = {RoleKind::kS2Prime, 0};
  ri.roles[ri.connector()] = {RoleKind::kConnector, 0};

  std::vector<Edge> edges;
  auto link = [&](Vertex a, Vertex b) { edges.push_back({std::min(a, b), std::max(a, b)}); };
  const Vertex partition_vertices[] = {ri.s1(), ri.s1_prime(), ri.s2(), ri.s2_prime(),
                                       ri.connector()};

  // (I) tails
  for (int j = 1; j <= m; ++j) {
    link(ri.tail(j, 3), ri.tail(j, 2));
    link(ri.tail(j, 3), ri.tail(j, 1));
    link(ri.tail(j, 2), ri.tail(j, 1));
    link(ri.tail(j, 2), ri.subset(j));
    link(ri.tail(j, 1), ri.subset(j));
    for (int i : ri.source.subsets[j - 1]) link(ri.tail(j, 1), ri.element(i));
  }
  // (II) subset vertices
  for (int j = 1; j <= m; ++j) {
    for (Vertex p : partition_vertices) link(ri.subset(j), p);
    for (int i = 1; i <= n; ++i) link(ri.subset(j), ri.element(i));
    for (int k = j + 1; k <= m; ++k) {
      bool meet = false;
      for (int e : ri.source.subsets[j - 1]) meet = meet || member[k - 1][e];
      if (meet) link(ri.subset(j), ri.subset(k));
    }
  }
  // (III) element vertices
  for (int i = 1; i <= n; ++i) {
    for (Vertex p : partition_vertices) link(ri.element(i), p);
    for (int k = i + 1; k <= n; ++k) link(ri.element(i), ri.element(k));
  }
  // (IV) partition vertices
  link(ri.s1(), ri.connector());
  link(ri.s1(), ri.s1_prime());
  link(ri.s1(), ri.s2_prime());
  link(ri.s2(), ri.connector());
  link(ri.s2(), ri.s1_prime());
  link(ri.s2(), ri.s2_prime());
  link(ri.s1_prime(), ri.connector());
  link(ri.s2_prime(), ri.connector());

  ri.graph = Graph(total, edges);
  return ri;
}

VertexSet tail_forced_neighbors(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  const int n = g.num_vertices();
  for (Vertex v : {a, b, c, d}) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kPatternMismatch, "tail vertex out of range");
  }
  auto same = [](std::span<const Vertex> nbrs, VertexSet want) {
    std::sort(want.begin(), want.end());
    return std::equal(nbrs.begin(), nbrs.end(), want.begin(), want.end());
  };
  if (!same(g.neighbors(a), {b, c})) {
    throw Error(ErrorCode::kPatternMismatch, "tail end must have exactly the neighbours b, c");
  }
  if (!same(g.neighbors(b), {a, c, d})) {
    throw Error(ErrorCode::kPatternMismatch, "second tail vertex must have neighbours a, c, d");
  }
  if (!g.has_edge(c, d)) throw Error(ErrorCode::kPatternMismatch, "c and d must be adjacent");
  VertexSet out;
  for (Vertex w : g.neighbors(c)) {
    if (w != a && w != b && w != d) out.push_back(w);
  }
  return out;
}

bool validate_splitting(const SetSplittingInstance& instance, const Partition& p) {
  const int n = instance.ground_size;
  std::vector<int> side(n + 1, 0);
  for (int e : p.block1) {
    if (e < 1 || e > n || side[e] != 0) return false;
    side[e] = 1;
  }
  for (int e : p.block2) {
    if (e < 1 || e > n || side[e] != 0) return false;
    side[e] = 2;
  }
  for (int i = 1; i <= n; ++i) {
    if (side[i] == 0) return false;
  }
  for (const auto& subset : instance.subsets) {
    bool in1 = false;
    bool in2 = false;
    for (int e : subset) {
      if (e < 1 || e > n) return false;
      in1 = in1 || side[e] == 1;
      in2 = in2 || side[e] == 2;
    }
    if (!in1 || !in2) return false;
  }
  return true;
}

Extraction extract_partition(const ReductionInstance& ri, const Graph& h) {
  if (!check_square_root(h, ri.graph)) {
    throw Error(ErrorCode::kNotARoot, "graph is not a square root of the instance");
  }
  const std::pair<ExtractionStrategy, Partition> candidates[] = {
      {ExtractionStrategy::kNeighborsOfS1, neighbors_split(ri, h, ri.s1())},
      {ExtractionStrategy::kNeighborsOfS2, neighbors_split(ri, h, ri.s2())},
      {ExtractionStrategy::kNeighborsOfS1Prime, neighbors_split(ri, h, ri.s1_prime())},
      {ExtractionStrategy::kNeighborsOfS2Prime, neighbors_split(ri, h, ri.s2_prime())},
      {ExtractionStrategy::kDistanceToS1VersusS2, distance_split(ri, h)},
  };
  for (const auto& [strategy, partition] : candidates) {
    if (validate_splitting(ri.source, partition)) return {partition, strategy};
  }
  const int n = ri.source.ground_size;
  if (n <= 20) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> first(n + 1, false);
      for (int i = 1; i <= n; ++i) first[i] = (mask >> (i - 1)) & 1u;
      Partition p = split_by(n, first);
      if (validate_splitting(ri.source, p)) return {std::move(p), ExtractionStrategy::kExhaustive};
    }
  }
  throw Error(ErrorCode::kNoValidSplitting, "no valid splitting could be extracted");
}

}  // namespace graphroots

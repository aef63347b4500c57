#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphroots/error.hpp"
#include "graphroots/graph.hpp"

namespace graphroots {
namespace {

// Both graphs are refined as one disjoint union (vertices of `b` shifted by
// n), so colour identifiers are comparable across the two sides.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), n_(a.num_vertices()) {}

  bool run() {
    std::vector<int> colors(2 * n_, 0);
    return search(refine(std::move(colors)));
  }

 private:
  std::span<const Vertex> neighbors(int x) const {
    return x < n_ ? a_.neighbors(x) : b_.neighbors(x - n_);
  }

  // Iterates (colour, multiset of neighbour colours) until the partition is
  // stable. New colours are ranks of sorted signatures, hence canonical.
  std::vector<int> refine(std::vector<int> colors) const {
    int num_colors = static_cast<int>(
        std::set<int>(colors.begin(), colors.end()).size());
    std::vector<std::pair<std::vector<int>, int>> sig(2 * n_);
    while (true) {
      for (int x = 0; x < 2 * n_; ++x) {
        auto& key = sig[x].first;
        key.assign(1, colors[x]);
        const int offset = x < n_ ? 0 : n_;
        for (Vertex w : neighbors(x)) key.push_back(colors[w + offset]);
        std::sort(key.begin() + 1, key.end());
        sig[x].second = x;
      }
      std::vector<std::vector<int>> keys;
      keys.reserve(2 * n_);
      for (const auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (int x = 0; x < 2 * n_; ++x) {
        colors[x] = static_cast<int>(
            std::lower_bound(keys.begin(), keys.end(), sig[x].first) - keys.begin());
      }
      const int next = static_cast<int>(keys.size());
      if (next == num_colors) return colors;
      num_colors = next;
    }
  }

  bool search(const std::vector<int>& colors) {
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> cells;
    for (int x = 0; x < 2 * n_; ++x) {
      auto& cell = cells[colors[x]];
      (x < n_ ? cell.first : cell.second).push_back(x);
    }
    const std::vector<int>* target = nullptr;
    const std::vector<int>* candidates = nullptr;
    for (const auto& [color, cell] : cells) {
      if (cell.first.size() != cell.second.size()) return false;
      if (cell.first.size() > 1 &&
          (target == nullptr || cell.first.size() < target->size())) {
        target = &cell.first;
        candidates = &cell.second;
      }
    }
    if (target == nullptr) return verify(colors);

    const int fresh = 2 * n_;
    const int pick = target->front();
    for (int cand : *candidates) {
      std::vector<int> next = colors;
      next[pick] = fresh;
      next[cand] = fresh;
      if (search(refine(std::move(next)))) return true;
    }
    return false;
  }

  // Discrete partition: the colour matching is the only candidate bijection.
  bool verify(const std::vector<int>& colors) const {
    std::map<int, Vertex> in_b;
    for (int x = n_; x < 2 * n_; ++x) in_b[colors[x]] = x - n_;
    std::vector<Vertex> map(n_);
    for (int x = 0; x < n_; ++x) map[x] = in_b.at(colors[x]);
    for (const Edge& e : a_.edges()) {
      if (!b_.has_edge(map[e.u], map[e.v])) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options) {
  const int n = a.num_vertices();
  if (n > options.max_vertices || b.num_vertices() > options.max_vertices) {
    throw Error(ErrorCode::kTooLarge,
                "is_isomorphic: more than " + std::to_string(options.max_vertices) +
                    " vertices");
  }
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return IsomorphismSearch(a, b).run();
}

}  // namespace graphroots

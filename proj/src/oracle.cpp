#include "graphroots/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "graphroots/error.hpp"

namespace graphroots {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

enum class EdgeState : std::uint8_t { kUndecided, kIn, kOut };

class Search {
 public:
  explicit Search(const RootQuery& q) : q_(q), n_(q.g.num_vertices()) {
    edges_ = q.g.edges();
    id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      id_[edges_[e].u * n_ + edges_[e].v] = static_cast<int>(e);
      id_[edges_[e].v * n_ + edges_[e].u] = static_cast<int>(e);
    }
    gadj_.assign(n_, 0);
    for (const Edge& e : edges_) {
      gadj_[e.u] |= bit(e.v);
      gadj_[e.v] |= bit(e.u);
    }
    state_.assign(edges_.size(), EdgeState::kUndecided);
    in_.assign(n_, 0);
    possible_ = gadj_;

    int lower = 3;
    if (q.girth_min) lower = *q.girth_min;
    if (q.girth_exact) lower = *q.girth_exact;
    for (int len = 3; len < lower; ++len) forbid(len);
    for (int len : q.forbidden_cycles) forbid(len);
    clique_rule_ = q.pruning && is_forbidden(3) && is_forbidden(4) && is_forbidden(5);
  }

  RootSearch run() {
    RootSearch out;
    if (initialize()) {
      dfs();
    }
    std::sort(roots_.begin(), roots_.end(),
              [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
    out.roots = std::move(roots_);
    out.status = status_;
    out.exhausted = status_ == SearchStatus::kExhausted;
    out.nodes = nodes_;
    return out;
  }

 private:
  void forbid(int len) {
    if (len >= 3 && len <= n_) {
      if (forbidden_.size() <= static_cast<std::size_t>(len)) forbidden_.resize(len + 1, false);
      forbidden_[len] = true;
      max_forbidden_ = std::max(max_forbidden_, len);
    }
  }
  bool is_forbidden(int len) const {
    return len >= 0 && static_cast<std::size_t>(len) < forbidden_.size() && forbidden_[len];
  }

  int edge_id(Vertex a, Vertex b) const { return id_[a * n_ + b]; }
  Mask closed(Vertex v) const { return gadj_[v] | bit(v); }

  bool assign(int e, EdgeState s) {
    if (state_[e] == s) return true;
    if (state_[e] != EdgeState::kUndecided) return false;
    state_[e] = s;
    const Edge& ed = edges_[e];
    if (s == EdgeState::kIn) {
      in_[ed.u] |= bit(ed.v);
      in_[ed.v] |= bit(ed.u);
    } else {
      possible_[ed.u] &= ~bit(ed.v);
      possible_[ed.v] &= ~bit(ed.u);
    }
    trail_.push_back(e);
    pending_.push_back(e);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int e = trail_.back();
      trail_.pop_back();
      const Edge& ed = edges_[e];
      if (state_[e] == EdgeState::kIn) {
        in_[ed.u] &= ~bit(ed.v);
        in_[ed.v] &= ~bit(ed.u);
      } else {
        possible_[ed.u] |= bit(ed.v);
        possible_[ed.v] |= bit(ed.u);
      }
      state_[e] = EdgeState::kUndecided;
    }
    pending_.clear();
  }

  bool propagate() {
    for (std::size_t head = 0; head < pending_.size(); ++head) {
      const int e = pending_[head];
      const bool ok = state_[e] == EdgeState::kIn ? on_in(edges_[e].u, edges_[e].v)
                                                   : on_out(edges_[e].u, edges_[e].v);
      if (!ok || !clique_rule_ok(edges_[e].u) || !clique_rule_ok(edges_[e].v)) {
        pending_.clear();
        return false;
      }
    }
    pending_.clear();
    return true;
  }

  // Root path u..x of `len` edges; reaching `target` next closes a cycle of
  // length len + 2 with the edge u-target.
  bool closes_forbidden(Vertex x, Vertex target, int len, Mask visited) const {
    Mask next = in_[x] & ~visited;
    if (len >= 1 && (next & bit(target)) != 0 && is_forbidden(len + 2)) return true;
    next &= ~bit(target);
    if (len + 3 > max_forbidden_) return false;
    bool found = false;
    for_each_bit(next, [&](int y) {
      found = found || closes_forbidden(y, target, len + 1, visited | bit(y));
    });
    return found;
  }

  struct PathEnd {
    Vertex end;
    int length;
    Mask visited;
  };

  void collect_paths(Vertex x, int length, Mask visited, int max_length,
                     std::vector<PathEnd>& out) const {
    out.push_back({x, length, visited});
    if (length == max_length) return;
    for_each_bit(in_[x] & ~visited,
                 [&](int y) { collect_paths(y, length + 1, visited | bit(y), max_length, out); });
  }

  // Excludes undecided g-edges ab that would close a forbidden cycle through
  // the new root edge uw: a ... u w ... b.
  bool exclude_cycle_closers(Vertex u, Vertex w) {
    if (max_forbidden_ < 3) return true;
    const int span = max_forbidden_ - 2;
    std::vector<PathEnd> left;
    collect_paths(u, 0, bit(u) | bit(w), span, left);
    for (const PathEnd& l : left) {
      std::vector<PathEnd> right;
      collect_paths(w, 0, l.visited | bit(w), span - l.length, right);
      for (const PathEnd& r : right) {
        if (!is_forbidden(l.length + r.length + 2) || !(gadj_[l.end] & bit(r.end))) continue;
        const int e = edge_id(l.end, r.end);
        if (state_[e] == EdgeState::kIn) return false;
        if (!assign(e, EdgeState::kOut)) return false;
      }
    }
    return true;
  }

  bool on_in(Vertex u, Vertex w) {
    // Two root neighbours of one vertex must be adjacent in g.
    if ((in_[w] & ~closed(u)) != 0 || (in_[u] & ~closed(w)) != 0) return false;
    if (max_forbidden_ >= 3 && closes_forbidden(u, w, 0, bit(u))) return false;
    if (!q_.pruning) return true;
    bool ok = true;
    auto exclude = [&](Vertex x, Mask outside) {
      for_each_bit(possible_[x] & ~in_[x] & outside, [&](int z) {
        ok = ok && assign(edge_id(x, z), EdgeState::kOut);
      });
    };
    exclude(w, ~closed(u));
    exclude(u, ~closed(w));
    return ok && exclude_cycle_closers(u, w);
  }

  // Every g-edge ab is a root edge or has a common root neighbour.
  bool check_cover(Vertex a, Vertex b) {
    const int e = edge_id(a, b);
    if (state_[e] == EdgeState::kIn || (in_[a] & in_[b]) != 0) return true;
    const Mask middles = possible_[a] & possible_[b];
    const bool direct = state_[e] == EdgeState::kUndecided;
    if (!direct && middles == 0) return false;
    if (!q_.pruning) return true;
    if (direct && middles == 0) return assign(e, EdgeState::kIn);
    if (!direct && std::has_single_bit(middles)) {
      const int c = std::countr_zero(middles);
      return assign(edge_id(a, c), EdgeState::kIn) && assign(edge_id(b, c), EdgeState::kIn);
    }
    return true;
  }

  bool on_out(Vertex u, Vertex w) {
    if (!check_cover(u, w)) return false;
    bool ok = true;
    for_each_bit(gadj_[u] & gadj_[w], [&](int b) {
      ok = ok && check_cover(u, b) && check_cover(w, b);
    });
    return ok;
  }

  bool clique_rule_ok(Vertex v) const {
    if (!clique_rule_ || possible_[v] != in_[v] || std::popcount(in_[v]) < 2) return true;
    const Mask members = in_[v] | bit(v);
    Mask common = ~Mask{0};
    for_each_bit(members, [&](int x) { common &= closed(x); });
    return common == members;
  }

  bool initialize() {
    for (const auto& [v, set] : q_.fixed_neighborhoods) {
      Mask want = 0;
      for (Vertex u : set) want |= bit(u);
      bool ok = true;
      for_each_bit(gadj_[v], [&](int u) {
        ok = ok && assign(edge_id(v, u), (want & bit(u)) ? EdgeState::kIn : EdgeState::kOut);
      });
      if (!ok) return false;
    }
    if (q_.pruning && !apply_tails()) return false;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (!check_cover(edges_[e].u, edges_[e].v)) return false;
    }
    return propagate();
  }

  // N(a) = {b, c}, N(b) = {a, c, d}, cd an edge: outside {a, b, c} the root
  // neighbours of d are exactly N_g(c) \ {a, b, d}.
  bool apply_tails() {
    for (Vertex a = 0; a < n_; ++a) {
      if (std::popcount(gadj_[a]) != 2) continue;
      for_each_bit(gadj_[a], [&](int b) { tail_candidates_.push_back({a, b}); });
    }
    for (const auto& [a, b] : tail_candidates_) {
      if (std::popcount(gadj_[b]) != 3) continue;
      const Mask c_mask = gadj_[a] & ~bit(b);
      const int c = std::countr_zero(c_mask);
      if (!(gadj_[b] & bit(c))) continue;
      const Mask d_mask = gadj_[b] & ~bit(a) & ~bit(c);
      const int d = std::countr_zero(d_mask);
      if (!(gadj_[c] & bit(d))) continue;
      const Mask tail = bit(a) | bit(b) | bit(c);
      const Mask want = gadj_[c] & ~bit(a) & ~bit(b) & ~bit(d);
      if ((want & ~gadj_[d]) != 0) return false;
      bool ok = true;
      for_each_bit(gadj_[d] & ~tail, [&](int z) {
        ok = ok && assign(edge_id(d, z), (want & bit(z)) ? EdgeState::kIn : EdgeState::kOut);
      });
      if (!ok) return false;
    }
    return true;
  }

  int first_undecided() const {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (state_[e] == EdgeState::kUndecided) return static_cast<int>(e);
    }
    return -1;
  }

  void record_leaf() {
    for (Vertex v = 0; v < n_; ++v) {
      Mask reach = in_[v];
      for_each_bit(in_[v], [&](int x) { reach |= in_[x]; });
      if ((reach & ~bit(v)) != gadj_[v]) return;
    }
    std::vector<Edge> chosen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (state_[e] == EdgeState::kIn) chosen.push_back(edges_[e]);
    }
    Graph h(n_, chosen);
    const Girth gh = girth(h);
    if (q_.girth_exact && gh != Girth(*q_.girth_exact)) return;
    if (q_.girth_min && gh < Girth(*q_.girth_min)) return;
    if (roots_.size() >= q_.limit) {
      status_ = SearchStatus::kLimitReached;
      stop_ = true;
      return;
    }
    roots_.push_back(std::move(h));
  }

  void dfs() {
    if (stop_) return;
    if (++nodes_ > q_.budget) {
      status_ = SearchStatus::kBudgetExceeded;
      stop_ = true;
      return;
    }
    const int e = first_undecided();
    if (e < 0) {
      record_leaf();
      return;
    }
    for (EdgeState s : {EdgeState::kIn, EdgeState::kOut}) {
      const std::size_t mark = trail_.size();
      if (assign(e, s) && propagate()) dfs();
      undo(mark);
      if (stop_) return;
    }
  }

  const RootQuery& q_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> id_;
  std::vector<Mask> gadj_;
  std::vector<bool> forbidden_;
  int max_forbidden_ = 0;
  bool clique_rule_ = false;

  std::vector<EdgeState> state_;
  std::vector<Mask> in_;
  std::vector<Mask> possible_;
  std::vector<int> trail_;
  std::vector<int> pending_;
  std::vector<std::pair<Vertex, Vertex>> tail_candidates_;

  std::vector<Graph> roots_;
  SearchStatus status_ = SearchStatus::kExhausted;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

void validate(const RootQuery& q) {
  const int n = q.g.num_vertices();
  if (n > 64) {
    throw Error(ErrorCode::kTooLarge, "root oracle handles at most 64 vertices");
  }
  if (q.girth_min && q.girth_exact) {
    throw Error(ErrorCode::kInvalidArgument, "set at most one of girth_min and girth_exact");
  }
  if ((q.girth_min && *q.girth_min < 3) || (q.girth_exact && *q.girth_exact < 3)) {
    throw Error(ErrorCode::kInvalidArgument, "girth bounds must be at least 3");
  }
  for (int len : q.forbidden_cycles) {
    if (len < 3) throw Error(ErrorCode::kInvalidArgument, "cycle lengths must be at least 3");
  }
  if (q.limit < 1) throw Error(ErrorCode::kInvalidArgument, "limit must be at least 1");
  for (const auto& [v, set] : q.fixed_neighborhoods) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidArgument, "fixed vertex out of range");
    for (Vertex u : set) {
      if (u < 0 || u >= n || !q.g.has_edge(v, u)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "vertex " + std::to_string(u) + " is not a neighbour of " +
                        std::to_string(v));
      }
    }
  }
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kExhausted: return "EXHAUSTED";
    case SearchStatus::kLimitReached: return "LIMIT_REACHED";
    case SearchStatus::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

RootSearch find_roots(const RootQuery& query) {
  validate(query);
  return Search(query).run();
}

GirthCensus count_roots_by_girth(const Graph& g, std::uint64_t budget) {
  RootQuery q;
  q.g = g;
  q.limit = std::numeric_limits<std::size_t>::max();
  q.budget = budget;
  const RootSearch search = find_roots(q);
  GirthCensus census;
  census.exhausted = search.exhausted;
  for (const Graph& h : search.roots) ++census.counts[girth(h)];
  return census;
}

}  // namespace graphroots

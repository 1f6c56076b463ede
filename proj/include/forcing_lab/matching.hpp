// Copyright 2026 The forcing-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORCING_LAB_MATCHING_HPP_
#define FORCING_LAB_MATCHING_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "forcing_lab/graph.hpp"

namespace forcing_lab {

/// A set of pairwise disjoint edges, kept sorted.
class Matching {
 public:
  Matching() { mate_.fill(-1); }

  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    mate_.fill(-1);
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
      if (covered_ & e.ends()) throw GraphError("matching edges are not disjoint");
      covered_ |= e.ends();
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
    }
  }

  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet covered() const { return covered_; }
  int size() const { return static_cast<int>(edges_.size()); }

  /// -1 when v is uncovered.
  int mate(int v) const { return mate_[v]; }

  bool contains(const Edge& e) const { return mate_[e.u] == e.v; }

  bool is_perfect_in(const Graph& g) const {
    if (covered_ != g.vertices()) return false;
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return g.adjacent(e.u, e.v); });
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.edges_ == b.edges_;
  }
  friend auto operator<=>(const Matching& a, const Matching& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  VertexSet covered_ = 0;
  std::array<std::int8_t, kMaxOrder> mate_{};
};

inline void require_perfect(const Graph& g, const Matching& m) {
  if (!m.is_perfect_in(g)) throw GraphError("matching is not a perfect matching of the graph");
}

namespace detail {

/// Perfect-matching existence on induced subgraphs, memoizing dead vertex
/// sets. Branches on the vertex of least remaining degree.
class PmOracle {
 public:
  explicit PmOracle(const Graph& g) : g_(g) {}

  bool exists(VertexSet rem) { return extend(rem, nullptr); }

  /// Fills `out` with a perfect matching of g[rem] when one exists.
  bool extend(VertexSet rem, std::vector<Edge>* out) {
    if (!rem) return true;
    if (popcount(rem) & 1) return false;
    if (dead_.contains(rem)) return false;
    int pick = -1;
    int best = kMaxOrder + 1;
    for (VertexSet s = rem; s; s &= s - 1) {
      const int v = lowest(s);
      const int d = popcount(g_.neighbors(v) & rem);
      if (d == 0) {
        dead_.insert(rem);
        return false;
      }
      if (d < best) {
        best = d;
        pick = v;
        if (d == 1) break;
      }
    }
    const VertexSet rest = rem & ~bit(pick);
    for (VertexSet s = g_.neighbors(pick) & rem; s; s &= s - 1) {
      const int w = lowest(s);
      if (extend(rest & ~bit(w), out)) {
        if (out) out->emplace_back(pick, w);
        return true;
      }
    }
    dead_.insert(rem);
    return false;
  }

  /// A perfect matching of g[rem] different from m restricted to rem, or
  /// nothing when m is the only one. m must perfectly match rem.
  std::optional<std::vector<Edge>> other_than(VertexSet rem, const Matching& m) {
    std::vector<Edge> acc;
    if (!other_rec(rem, m, acc)) return std::nullopt;
    return acc;
  }

 private:
  bool other_rec(VertexSet rem, const Matching& m, std::vector<Edge>& acc) {
    if (!rem) return false;
    int pick = -1;
    int best = kMaxOrder + 1;
    for (VertexSet s = rem; s; s &= s - 1) {
      const int v = lowest(s);
      const int d = popcount(g_.neighbors(v) & rem);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    const int partner = m.mate(pick);
    const VertexSet rest = rem & ~bit(pick);
    for (VertexSet s = g_.neighbors(pick) & rest & ~bit(partner); s; s &= s - 1) {
      const int w = lowest(s);
      std::vector<Edge> tail;
      if (extend(rest & ~bit(w), &tail)) {
        acc.insert(acc.end(), tail.begin(), tail.end());
        acc.emplace_back(pick, w);
        return true;
      }
    }
    acc.emplace_back(pick, partner);
    if (other_rec(rest & ~bit(partner), m, acc)) return true;
    acc.pop_back();
    return false;
  }

  const Graph& g_;
  std::unordered_set<VertexSet> dead_;
};

}  // namespace detail

inline bool has_perfect_matching(const Graph& g, VertexSet within) {
  return detail::PmOracle(g).exists(within & g.vertices());
}

inline bool has_perfect_matching(const Graph& g) {
  return has_perfect_matching(g, g.vertices());
}

inline std::optional<Matching> find_perfect_matching(const Graph& g) {
  std::vector<Edge> edges;
  if (!detail::PmOracle(g).extend(g.vertices(), &edges)) return std::nullopt;
  return Matching(std::move(edges));
}

/// All perfect matchings in branching order: take the lowest uncovered
/// vertex and try its neighbors in increasing index. Stops after `limit`
/// matchings when a limit is given. Odd order yields nothing.
inline std::vector<Matching> enumerate_perfect_matchings(
    const Graph& g, std::optional<long long> limit = std::nullopt) {
  std::vector<Matching> out;
  if (g.order() % 2 != 0) return out;
  detail::PmOracle oracle(g);
  std::vector<Edge> stack;
  std::function<bool(VertexSet)> rec = [&](VertexSet rem) -> bool {
    if (!rem) {
      out.emplace_back(stack);
      return !(limit && static_cast<long long>(out.size()) >= *limit);
    }
    const int v = lowest(rem);
    const VertexSet rest = rem & ~bit(v);
    for (VertexSet s = g.neighbors(v) & rest; s; s &= s - 1) {
      const int w = lowest(s);
      if (!oracle.exists(rest & ~bit(w))) continue;
      stack.emplace_back(v, w);
      const bool go_on = rec(rest & ~bit(w));
      stack.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(g.vertices());
  return out;
}

/// Full enumeration guarded by `pm_limit`; exceeding it is a ResourceError.
inline std::vector<Matching> all_perfect_matchings(const Graph& g, const Limits& limits) {
  auto out = enumerate_perfect_matchings(g, limits.pm_limit + 1);
  if (static_cast<long long>(out.size()) > limits.pm_limit) {
    throw ResourceError("perfect matching count exceeds pm_limit " +
                        std::to_string(limits.pm_limit));
  }
  return out;
}

inline bool has_unique_perfect_matching(const Graph& g) {
  return enumerate_perfect_matchings(g, 2).size() == 1;
}

/// Cycle whose edges alternate between a matching M and E(G) \ M.
struct AlternatingCycle {
  /// Canonical form: the smallest vertex first, then toward its smaller
  /// cycle neighbor.
  std::vector<int> vertices;
  std::vector<Edge> m_edges;
  std::vector<Edge> non_m_edges;

  VertexSet vertex_set() const {
    VertexSet s = 0;
    for (int v : vertices) s |= bit(v);
    return s;
  }
  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

namespace detail {

inline AlternatingCycle make_cycle(std::vector<int> walk, const Matching& m) {
  // walk[0] is the smallest vertex; orient toward its smaller neighbor.
  if (walk.size() > 2 && walk.back() < walk[1]) std::reverse(walk.begin() + 1, walk.end());
  AlternatingCycle c;
  c.vertices = std::move(walk);
  const std::size_t len = c.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Edge e(c.vertices[i], c.vertices[(i + 1) % len]);
    (m.contains(e) ? c.m_edges : c.non_m_edges).push_back(e);
  }
  std::sort(c.m_edges.begin(), c.m_edges.end());
  std::sort(c.non_m_edges.begin(), c.non_m_edges.end());
  return c;
}

/// Splits the symmetric difference of two perfect matchings of the same
/// vertex set into its alternating cycles (all relative to `m`).
inline std::vector<AlternatingCycle> difference_cycles(const Matching& m,
                                                       std::span<const Edge> other) {
  std::array<int, kMaxOrder> other_mate{};
  other_mate.fill(-1);
  VertexSet moved = 0;
  for (const Edge& e : other) {
    other_mate[e.u] = e.v;
    other_mate[e.v] = e.u;
    if (!m.contains(e)) moved |= e.ends();
  }
  std::vector<AlternatingCycle> out;
  while (moved) {
    const int start = lowest(moved);
    std::vector<int> walk{start};
    int cur = m.mate(start);
    bool via_m = true;
    while (cur != start) {
      walk.push_back(cur);
      cur = via_m ? other_mate[cur] : m.mate(cur);
      via_m = !via_m;
    }
    VertexSet vs = 0;
    for (int v : walk) vs |= bit(v);
    moved &= ~vs;
    out.push_back(make_cycle(std::move(walk), m));
  }
  return out;
}

}  // namespace detail

/// Every M-alternating cycle of g, each exactly once in canonical form,
/// ordered by (smallest vertex, DFS order). DFS grows the cycle by jumps:
/// a non-M edge followed by the forced M edge.
inline std::vector<AlternatingCycle> alternating_cycles(const Graph& g, const Matching& m,
                                                        const Limits& limits = {}) {
  require_perfect(g, m);
  std::vector<AlternatingCycle> out;
  std::vector<int> walk;
  std::function<void(int, int, VertexSet)> dfs = [&](int start, int cur, VertexSet used) {
    // cur was entered through an M edge.
    for (VertexSet s = g.neighbors(cur) & ~used & ~first_n(start + 1); s; s &= s - 1) {
      const int x = lowest(s);
      const int y = m.mate(x);
      if ((used >> y) & 1U || y < start) continue;
      walk.push_back(x);
      walk.push_back(y);
      if (g.adjacent(y, start)) {
        out.push_back(detail::make_cycle(walk, m));
        if (static_cast<long long>(out.size()) > limits.cycle_limit) {
          throw ResourceError("alternating cycle count exceeds cycle_limit " +
                              std::to_string(limits.cycle_limit));
        }
      }
      dfs(start, y, used | bit(x) | bit(y));
      walk.pop_back();
      walk.pop_back();
    }
  };
  for (int start = 0; start < g.order(); ++start) {
    const int partner = m.mate(start);
    if (partner < start) continue;
    walk = {start, partner};
    dfs(start, partner, bit(start) | bit(partner));
  }
  return out;
}

/// Edges lying in at least one perfect matching, in edge-index order.
inline std::vector<Edge> allowed_edges(const Graph& g) {
  detail::PmOracle oracle(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (oracle.exists(g.vertices() & ~e.ends())) out.push_back(e);
  }
  return out;
}

inline std::vector<Edge> forbidden_edges(const Graph& g) {
  detail::PmOracle oracle(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!oracle.exists(g.vertices() & ~e.ends())) out.push_back(e);
  }
  return out;
}

/// Connected, has a perfect matching, and every edge is allowed.
inline bool is_elementary(const Graph& g) {
  return g.order() > 0 && is_connected(g) && has_perfect_matching(g) &&
         forbidden_edges(g).empty();
}

namespace detail {

inline void mis_search(const Graph& g, VertexSet cand, VertexSet chosen, VertexSet& best) {
  // Vertices of remaining degree <= 1 can always be taken.
  for (bool changed = true; changed && cand;) {
    changed = false;
    for (VertexSet s = cand; s; s &= s - 1) {
      const int v = lowest(s);
      if (popcount(g.neighbors(v) & cand) <= 1) {
        chosen |= bit(v);
        cand &= ~bit(v) & ~g.neighbors(v);
        changed = true;
        break;
      }
    }
  }
  if (popcount(chosen) + popcount(cand) <= popcount(best)) return;
  if (!cand) {
    best = chosen;
    return;
  }
  int pivot = lowest(cand);
  for (VertexSet s = cand; s; s &= s - 1) {
    const int v = lowest(s);
    if (popcount(g.neighbors(v) & cand) > popcount(g.neighbors(pivot) & cand)) pivot = v;
  }
  mis_search(g, cand & ~bit(pivot) & ~g.neighbors(pivot), chosen | bit(pivot), best);
  mis_search(g, cand & ~bit(pivot), chosen, best);
}

}  // namespace detail

/// A maximum independent set (exact branch and bound).
inline VertexSet maximum_independent_set(const Graph& g) {
  VertexSet best = 0;
  detail::mis_search(g, g.vertices(), 0, best);
  return best;
}

inline int independence_number(const Graph& g) {
  return popcount(maximum_independent_set(g));
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_MATCHING_HPP_

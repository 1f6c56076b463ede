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

#ifndef FORCING_LAB_GRAPH_HPP_
#define FORCING_LAB_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forcing_lab/errors.hpp"

namespace forcing_lab {

/// A set of vertices of a graph with at most 32 vertices.
using VertexSet = std::uint32_t;

inline constexpr int kMaxOrder = 32;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet first_n(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr VertexSet ends() const { return bit(u) | bit(v); }
  constexpr bool touches(int w) const { return u == w || v == w; }
  constexpr int other(int w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1 stored as adjacency bit rows.
/// Values are immutable once built; every mutator returns a new graph.
class Graph {
 public:
  /// The graph with no vertices. Acts as the identity for join and union.
  Graph() = default;

  Graph(int order, std::span<const Edge> edges) : order_(order) {
    if (order < 0 || order > kMaxOrder) {
      throw GraphError("graph order " + std::to_string(order) +
                       " outside [0, 32]");
    }
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw GraphError("loop at vertex " + std::to_string(e.u));
      }
      if (e.u < 0 || e.v >= order) {
        throw GraphError("edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") has an endpoint outside [0, " +
                         std::to_string(order) + ")");
      }
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
    recount();
  }

  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rows are symmetrized and loops dropped.
  static Graph from_rows(int order, std::span<const VertexSet> rows) {
    if (order < 0 || order > kMaxOrder ||
        rows.size() < static_cast<std::size_t>(order)) {
      throw GraphError("bad adjacency row count");
    }
    Graph g;
    g.order_ = order;
    const VertexSet all = first_n(order);
    for (int v = 0; v < order; ++v) g.adj_[v] = rows[v] & all & ~bit(v);
    for (int v = 0; v < order; ++v) {
      for (VertexSet s = g.adj_[v]; s; s &= s - 1) g.adj_[lowest(s)] |= bit(v);
    }
    g.recount();
    return g;
  }

  int order() const { return order_; }
  VertexSet vertices() const { return first_n(order_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  int edge_count() const { return edge_count_; }

  int min_degree() const {
    int d = order_ == 0 ? 0 : kMaxOrder;
    for (int v = 0; v < order_; ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Edges in lexicographic (u, v) order, u < v. This order is the edge index.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order_; ++u) {
      for (VertexSet s = adj_[u] & ~first_n(u + 1); s; s &= s - 1) {
        out.emplace_back(u, lowest(s));
      }
    }
    return out;
  }

  std::optional<int> edge_index(const Edge& e) const {
    if (!adjacent(e.u, e.v)) return std::nullopt;
    int idx = 0;
    for (int u = 0; u < e.u; ++u) idx += popcount(adj_[u] & ~first_n(u + 1));
    idx += popcount(adj_[e.u] & ~first_n(e.u + 1) & first_n(e.v));
    return idx;
  }

  Graph without_edges(std::span<const Edge> removed) const {
    Graph g = *this;
    for (const Edge& e : removed) {
      g.adj_[e.u] &= ~bit(e.v);
      g.adj_[e.v] &= ~bit(e.u);
    }
    g.recount();
    return g;
  }

  Graph with_edges(std::span<const Edge> added) const {
    Graph g = *this;
    for (const Edge& e : added) {
      if (e.u == e.v || e.v >= order_) throw GraphError("bad added edge");
      g.adj_[e.u] |= bit(e.v);
      g.adj_[e.v] |= bit(e.u);
    }
    g.recount();
    return g;
  }

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const {
    keep &= vertices();
    std::array<int, kMaxOrder> label{};
    int next = 0;
    for (VertexSet s = keep; s; s &= s - 1) label[lowest(s)] = next++;
    Graph g;
    g.order_ = next;
    for (VertexSet s = keep; s; s &= s - 1) {
      const int v = lowest(s);
      for (VertexSet t = adj_[v] & keep; t; t &= t - 1) {
        g.adj_[label[v]] |= bit(label[lowest(t)]);
      }
    }
    g.recount();
    return g;
  }

  /// Applies a relabeling: vertex v becomes perm[v].
  Graph permuted(std::span<const int> perm) const {
    Graph g;
    g.order_ = order_;
    for (int v = 0; v < order_; ++v) {
      for (VertexSet s = adj_[v]; s; s &= s - 1) {
        g.adj_[perm[v]] |= bit(perm[lowest(s)]);
      }
    }
    g.recount();
    return g;
  }

  Graph complement() const {
    Graph g;
    g.order_ = order_;
    for (int v = 0; v < order_; ++v) g.adj_[v] = vertices() & ~adj_[v] & ~bit(v);
    g.recount();
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  void recount() {
    int sum = 0;
    for (int v = 0; v < order_; ++v) sum += popcount(adj_[v]);
    edge_count_ = sum / 2;
  }

  int order_ = 0;
  int edge_count_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Validating constructor used at API boundaries: requires 0 < order <= 32.
/// Duplicate edges are merged.
inline Graph build_graph(int order, std::span<const Edge> edges) {
  if (order <= 0 || order > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) +
                     " outside [1, 32]");
  }
  return Graph(order, edges);
}

inline Graph build_graph(int order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

inline void check_order(int order) {
  if (order > kMaxOrder) {
    throw GraphError("resulting order " + std::to_string(order) +
                     " exceeds the cap of 32");
  }
}

/// Vertices of g keep their labels; vertices of h are shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(g.order() + h.order());
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) {
    edges.emplace_back(e.u + g.order(), e.v + g.order());
  }
  return Graph(g.order() + h.order(), edges);
}

inline Graph join(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  std::vector<Edge> cross;
  cross.reserve(static_cast<std::size_t>(g.order()) * h.order());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < h.order(); ++b) cross.emplace_back(a, g.order() + b);
  }
  return u.with_edges(cross);
}

/// Vertex (a, x) is labeled a * |V(h)| + x.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  check_order(g.order() * m);
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a) {
    for (const Edge& e : h.edges()) edges.emplace_back(a * m + e.u, a * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int x = 0; x < m; ++x) edges.emplace_back(e.u * m + x, e.v * m + x);
  }
  return Graph(g.order() * m, edges);
}

enum class GeneratorKind { kPath, kCycle, kComplete, kCompleteBipartite, kHypercube, kEmpty };

/// Canonical labeled instances. Paths and cycles are numbered consecutively,
/// K_{a,b} has sides {0..a-1} and {a..a+b-1}, Q_k vertices are the k-bit
/// strings read as integers.
inline Graph generate(GeneratorKind kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw GraphError("wrong parameter count");
    for (int p : params) {
      if (p < 0) throw GraphError("negative generator parameter");
    }
  };
  std::vector<Edge> edges;
  switch (kind) {
    case GeneratorKind::kPath: {
      need(1);
      check_order(params[0]);
      if (params[0] < 1) throw GraphError("path needs at least one vertex");
      for (int v = 0; v + 1 < params[0]; ++v) edges.emplace_back(v, v + 1);
      return Graph(params[0], edges);
    }
    case GeneratorKind::kCycle: {
      need(1);
      check_order(params[0]);
      if (params[0] < 3) throw GraphError("cycle length must be at least 3");
      for (int v = 0; v < params[0]; ++v) edges.emplace_back(v, (v + 1) % params[0]);
      return Graph(params[0], edges);
    }
    case GeneratorKind::kComplete: {
      need(1);
      check_order(params[0]);
      for (int u = 0; u < params[0]; ++u) {
        for (int v = u + 1; v < params[0]; ++v) edges.emplace_back(u, v);
      }
      return Graph(params[0], edges);
    }
    case GeneratorKind::kCompleteBipartite: {
      need(2);
      const int a = params[0];
      const int b = params[1];
      check_order(a + b);
      for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
      }
      return Graph(a + b, edges);
    }
    case GeneratorKind::kHypercube: {
      need(1);
      if (params[0] > 5) throw GraphError("hypercube dimension above 5 exceeds the cap");
      const int order = 1 << params[0];
      for (int v = 0; v < order; ++v) {
        for (int j = 0; j < params[0]; ++j) {
          if (const int w = v ^ (1 << j); v < w) edges.emplace_back(v, w);
        }
      }
      return Graph(order, edges);
    }
    case GeneratorKind::kEmpty: {
      need(1);
      check_order(params[0]);
      return Graph(params[0], edges);
    }
  }
  throw GraphError("unknown generator");
}

inline Graph generate(GeneratorKind kind, std::initializer_list<int> params) {
  return generate(kind, std::span<const int>(params.begin(), params.size()));
}

inline Graph path_graph(int n) { return generate(GeneratorKind::kPath, {n}); }
inline Graph cycle_graph(int n) { return generate(GeneratorKind::kCycle, {n}); }
inline Graph complete_graph(int n) { return generate(GeneratorKind::kComplete, {n}); }
inline Graph complete_bipartite(int a, int b) {
  return generate(GeneratorKind::kCompleteBipartite, {a, b});
}
inline Graph hypercube(int k) { return generate(GeneratorKind::kHypercube, {k}); }
inline Graph empty_graph(int n) { return generate(GeneratorKind::kEmpty, {n}); }

/// n disjoint copies of K_2 on pairs (2i, 2i+1).
inline Graph matching_graph(int n) {
  check_order(2 * n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * n, edges);
}

inline VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of the subgraph induced by `within`, ordered by
/// their smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  within &= g.vertices();
  while (within) {
    const VertexSet c = component_of(g, lowest(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || component_of(g, 0, g.vertices()) == g.vertices();
}

/// Cyclomatic number e - v + 1. Only defined for connected graphs.
inline int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw GraphError("cyclomatic number needs a connected graph");
  return g.edge_count() - g.order() + 1;
}

struct Bipartition {
  VertexSet side_u = 0;
  VertexSet side_v = 0;

  bool balanced() const { return popcount(side_u) == popcount(side_v); }
};

/// 2-coloring by BFS per component; the smallest vertex of each component
/// (and every isolated vertex) lands in side_u.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
  Bipartition b;
  for (const VertexSet comp : components(g)) {
    VertexSet color_u = bit(lowest(comp));
    VertexSet color_v = 0;
    VertexSet frontier = color_u;
    bool on_u = true;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
      if (next & (on_u ? color_u : color_v)) return std::nullopt;
      next &= ~(color_u | color_v);
      (on_u ? color_v : color_u) |= next;
      frontier = next;
      on_u = !on_u;
    }
    b.side_u |= color_u;
    b.side_v |= color_v;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) & ((b.side_u >> v) & 1U ? b.side_u : b.side_v)) {
      return std::nullopt;
    }
  }
  return b;
}

inline bool is_bipartite(const Graph& g) { return bipartition_of(g).has_value(); }

}  // namespace forcing_lab

#endif  // FORCING_LAB_GRAPH_HPP_

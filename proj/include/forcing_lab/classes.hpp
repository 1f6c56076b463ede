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

#ifndef FORCING_LAB_CLASSES_HPP_
#define FORCING_LAB_CLASSES_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

struct SplitPartition {
  VertexSet clique = 0;
  VertexSet independent = 0;
};

/// Clique + independent set partition if one exists. The degree-sequence
/// test (sum of the m largest degrees equals m(m-1) plus the rest, with
/// m = max{i : d_i >= i - 1}) is exact, and when it holds the m
/// highest-degree vertices are a clique with an independent complement.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < g.order(); ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition p;
  for (int i = 0; i < m; ++i) p.clique |= bit(order[i]);
  p.independent = g.vertices() & ~p.clique;
  for (VertexSet s = p.clique; s; s &= s - 1) {
    const VertexSet closed = g.neighbors(lowest(s)) | bit(lowest(s));
    if ((closed & p.clique) != p.clique) return std::nullopt;
  }
  for (VertexSet s = p.independent; s; s &= s - 1) {
    if (g.neighbors(lowest(s)) & p.independent) return std::nullopt;
  }
  return p;
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

namespace detail {

inline bool cograph_rec(const Graph& g, const Graph& co, VertexSet s) {
  if (popcount(s) <= 3) {
    // P4 needs four vertices.
    return true;
  }
  auto parts = components(g, s);
  if (parts.size() == 1) parts = components(co, s);
  if (parts.size() == 1) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [&](VertexSet p) { return cograph_rec(g, co, p); });
}

}  // namespace detail

/// P4-free test by recursive decomposition: a cograph on two or more vertices
/// is disconnected or has a disconnected complement.
inline bool is_cograph(const Graph& g) {
  return detail::cograph_rec(g, g.complement(), g.vertices());
}

/// Components of the bipartite complement K_{|U|,|V|} - E(G) that meet both
/// sides, as (|part in U|, |part in V|, vertex set). F0-freeness holds iff
/// each of them is complete bipartite in the complement.
struct BipartiteComplement {
  bool f0_free = true;
  std::vector<std::pair<int, int>> deleted_parts;
  std::vector<VertexSet> deleted_sets;
};

inline BipartiteComplement bipartite_complement(const Graph& g, const Bipartition& b) {
  std::vector<Edge> missing;
  for (VertexSet su = b.side_u; su; su &= su - 1) {
    const int u = lowest(su);
    for (VertexSet sv = b.side_v & ~g.neighbors(u); sv; sv &= sv - 1) {
      missing.emplace_back(u, lowest(sv));
    }
  }
  const Graph co(g.order(), missing);
  BipartiteComplement out;
  for (const VertexSet c : components(co)) {
    const VertexSet cu = c & b.side_u;
    const VertexSet cv = c & b.side_v;
    if (!cu || !cv) continue;
    for (VertexSet s = cu; s; s &= s - 1) {
      if (g.neighbors(lowest(s)) & cv) out.f0_free = false;
    }
    out.deleted_parts.emplace_back(popcount(cu), popcount(cv));
    out.deleted_sets.push_back(c);
  }
  return out;
}

/// Naive F0 scan: two vertices per side inducing exactly one edge.
inline bool has_induced_f0(const Graph& g, const Bipartition& b) {
  for (VertexSet a = b.side_u; a; a &= a - 1) {
    for (VertexSet a2 = a & (a - 1); a2; a2 &= a2 - 1) {
      const int u1 = lowest(a);
      const int u2 = lowest(a2);
      for (VertexSet c = b.side_v; c; c &= c - 1) {
        for (VertexSet c2 = c & (c - 1); c2; c2 &= c2 - 1) {
          const int v1 = lowest(c);
          const int v2 = lowest(c2);
          const int edges = g.adjacent(u1, v1) + g.adjacent(u1, v2) + g.adjacent(u2, v1) +
                            g.adjacent(u2, v2);
          if (edges == 1) return true;
        }
      }
    }
  }
  return false;
}

/// Every 2-coloring of a bipartite graph: each component may be flipped.
/// The first component keeps its orientation.
inline std::vector<Bipartition> all_bipartitions(const Graph& g) {
  const auto base = bipartition_of(g);
  if (!base) return {};
  const auto comps = components(g);
  std::vector<Bipartition> out;
  const std::size_t free = comps.size() > 0 ? comps.size() - 1 : 0;
  for (unsigned long long flips = 0; flips < (1ULL << free); ++flips) {
    Bipartition b = *base;
    for (std::size_t i = 1; i < comps.size(); ++i) {
      if ((flips >> (i - 1)) & 1ULL) {
        const VertexSet c = comps[i];
        const VertexSet cu = b.side_u & c;
        const VertexSet cv = b.side_v & c;
        b.side_u = (b.side_u & ~c) | cv;
        b.side_v = (b.side_v & ~c) | cu;
      }
    }
    out.push_back(b);
  }
  return out;
}

struct ClassReport {
  bool is_split = false;
  bool is_cograph = false;
  /// Set for bipartite inputs only, relative to `bipartition`.
  std::optional<bool> is_f0_free;
  std::optional<Bipartition> bipartition;
  bool is_elementary = false;
  /// Part sizes (|U side|, |V side|) of the deleted complete bipartite subgraphs.
  std::vector<std::pair<int, int>> deleted_subgraphs;
  bool g1_member = false;
  bool g2_member = false;
  /// The two vertex sets of the complete bipartite parts of a G2 member.
  std::vector<VertexSet> g2_parts;
};

namespace detail {

inline bool is_balanced_complete_bipartite(const Graph& g, VertexSet part) {
  const Graph h = g.induced(part);
  const auto b = bipartition_of(h);
  if (!b || !b->balanced() || !is_connected(h)) return false;
  const int a = popcount(b->side_u);
  return a >= 1 && h.edge_count() == a * a;
}

}  // namespace detail

/// Membership in the family obtained from K_{n,n} by deleting the edges of
/// vertex-disjoint complete bipartite subgraphs of order <= n (at least one).
/// Tries every balanced 2-coloring; returns the witnessing one.
inline std::optional<std::pair<Bipartition, BipartiteComplement>> g1_witness(const Graph& g) {
  if (g.order() < 2 || g.order() % 2 != 0) return std::nullopt;
  const int n = g.order() / 2;
  for (const Bipartition& b : all_bipartitions(g)) {
    if (popcount(b.side_u) != n) continue;
    auto bc = bipartite_complement(g, b);
    if (!bc.f0_free || bc.deleted_parts.empty()) continue;
    const bool small = std::all_of(bc.deleted_parts.begin(), bc.deleted_parts.end(),
                                   [&](const auto& p) { return p.first + p.second <= n; });
    if (small) return std::make_pair(b, std::move(bc));
  }
  return std::nullopt;
}

/// Two balanced complete bipartite graphs joined only by forbidden edges:
/// the allowed-edge subgraph spans the graph in exactly two components, each
/// inducing some K_{a,a}.
inline std::optional<std::vector<VertexSet>> g2_witness(const Graph& g) {
  if (g.order() < 4 || !is_bipartite(g) || !has_perfect_matching(g)) return std::nullopt;
  const Graph allowed(g.order(), allowed_edges(g));
  const auto parts = components(allowed);
  if (parts.size() != 2) return std::nullopt;
  for (VertexSet p : parts) {
    if (!detail::is_balanced_complete_bipartite(g, p)) return std::nullopt;
  }
  return parts;
}

inline ClassReport classify(const Graph& g) {
  ClassReport r;
  r.is_split = is_split(g);
  r.is_cograph = is_cograph(g);
  r.is_elementary = is_elementary(g);
  if (const auto w = g1_witness(g)) {
    r.g1_member = true;
    r.bipartition = w->first;
    r.is_f0_free = true;
    r.deleted_subgraphs = w->second.deleted_parts;
  } else if (const auto b = bipartition_of(g)) {
    r.bipartition = *b;
    auto bc = bipartite_complement(g, *b);
    r.is_f0_free = bc.f0_free;
    if (bc.f0_free) r.deleted_subgraphs = bc.deleted_parts;
  }
  if (auto parts = g2_witness(g)) {
    r.g2_member = true;
    r.g2_parts = std::move(*parts);
  }
  return r;
}

/// Predicts f(G) = n - 1 for a graph of order 2n: complete multipartite with
/// every part of size <= n, or K_{n,n} with extra edges inside one side only.
/// In the second case the other side V is independent and every vertex of V
/// has neighborhood exactly the complement of V.
inline bool recognize_f_n1(const Graph& g) {
  if (g.order() == 0 || g.order() % 2 != 0) return false;
  const int n = g.order() / 2;
  const Graph co = g.complement();
  const auto parts = components(co);
  const bool multipartite = std::all_of(parts.begin(), parts.end(), [&](VertexSet p) {
    const int s = popcount(p);
    return co.induced(p).edge_count() == s * (s - 1) / 2 && s <= n;
  });
  if (multipartite) return true;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet side = g.vertices() & ~g.neighbors(v);
    if (popcount(side) != n) continue;
    bool ok = true;
    for (VertexSet s = side; s && ok; s &= s - 1) ok = g.neighbors(lowest(s)) == (g.vertices() & ~side);
    if (ok) return true;
  }
  return false;
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_CLASSES_HPP_

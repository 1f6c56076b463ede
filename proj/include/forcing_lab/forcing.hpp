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

#ifndef FORCING_LAB_FORCING_HPP_
#define FORCING_LAB_FORCING_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

enum class Method { kSubsetSearch, kCycleHitting };

inline const char* to_string(Method m) {
  return m == Method::kSubsetSearch ? "subset_search" : "cycle_hitting";
}

/// Optimum of a forcing-type problem for one perfect matching, with the
/// lexicographically first optimal witness.
struct ForcingResult {
  int value = 0;
  Matching witness_matching;
  /// Forcing set (subset of the matching) or anti-forcing set (disjoint from it).
  std::vector<Edge> witness_set;
  Method method = Method::kSubsetSearch;
};

namespace detail {

inline VertexSet ends_of(std::span<const Edge> edges) {
  VertexSet s = 0;
  for (const Edge& e : edges) s |= e.ends();
  return s;
}

inline void count_node(long long& nodes, const Limits& limits) {
  if (++nodes > limits.node_limit) {
    throw ResourceError("search nodes exceed node_limit " + std::to_string(limits.node_limit));
  }
}

/// Bit i set iff the i-th edge of m (sorted order) lies on the cycle.
inline std::uint32_t m_edge_mask(const Matching& m, const AlternatingCycle& c) {
  std::uint32_t mask = 0;
  for (const Edge& e : c.m_edges) {
    const auto it = std::lower_bound(m.edges().begin(), m.edges().end(), e);
    mask |= std::uint32_t{1} << (it - m.edges().begin());
  }
  return mask;
}

}  // namespace detail

/// True iff s is contained in no perfect matching other than m, i.e. the
/// graph left after deleting V(s) has m \ s as its only perfect matching.
inline bool is_forcing_set(const Graph& g, const Matching& m, std::span<const Edge> s) {
  require_perfect(g, m);
  for (const Edge& e : s) {
    if (!m.contains(e)) throw GraphError("forcing set candidate is not a subset of the matching");
  }
  detail::PmOracle oracle(g);
  return !oracle.other_than(g.vertices() & ~detail::ends_of(s), m).has_value();
}

/// True iff x avoids m and m is the only perfect matching of g - x.
inline bool is_anti_forcing_set(const Graph& g, const Matching& m, std::span<const Edge> x) {
  require_perfect(g, m);
  for (const Edge& e : x) {
    if (m.contains(e) || !g.adjacent(e.u, e.v)) {
      throw GraphError("anti-forcing set must consist of graph edges outside the matching");
    }
  }
  const Graph h = g.without_edges(x);
  detail::PmOracle oracle(h);
  return !oracle.other_than(h.vertices(), m).has_value();
}

/// f(G, M) by iterative deepening over subsets of M in lexicographic order.
/// Sizes start at a greedy disjoint-cycle lower bound; subsets disjoint from
/// an alternating cycle already seen are skipped without a residue test.
inline ForcingResult forcing_number(const Graph& g, const Matching& m, const Limits& limits = {}) {
  require_perfect(g, m);
  const int n = m.size();
  detail::PmOracle oracle(g);
  std::vector<std::uint32_t> known;

  int lower = 0;
  for (VertexSet rem = g.vertices();;) {
    const auto other = oracle.other_than(rem, m);
    if (!other) break;
    for (const auto& c : detail::difference_cycles(m, *other)) {
      ++lower;
      rem &= ~c.vertex_set();
      known.push_back(detail::m_edge_mask(m, c));
    }
  }

  ForcingResult result;
  result.witness_matching = m;
  result.method = Method::kSubsetSearch;
  long long nodes = 0;
  std::vector<int> pick;
  for (int k = lower; k <= n; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i : pick) mask |= std::uint32_t{1} << i;
      const bool misses = std::any_of(known.begin(), known.end(),
                                      [&](std::uint32_t c) { return (c & mask) == 0; });
      if (!misses) {
        detail::count_node(nodes, limits);
        VertexSet rem = g.vertices();
        for (int i : pick) rem &= ~m.edges()[i].ends();
        const auto other = oracle.other_than(rem, m);
        if (!other) {
          result.value = k;
          for (int i : pick) result.witness_set.push_back(m.edges()[i]);
          return result;
        }
        for (const auto& c : detail::difference_cycles(m, *other)) {
          known.push_back(detail::m_edge_mask(m, c));
        }
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw GraphError("unreachable: the whole matching is always forcing");
}

/// Exact minimum hitting set of explicit sets over a universe of at most 32
/// elements. Returns the hitting set as a bit mask.
inline std::uint32_t minimum_hitting_set(std::span<const std::uint32_t> sets,
                                         const Limits& limits = {}) {
  std::uint32_t best = ~std::uint32_t{0};
  int best_size = 33;
  long long nodes = 0;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t chosen) {
    detail::count_node(nodes, limits);
    const int size = std::popcount(chosen);
    if (size >= best_size) return;
    const std::uint32_t* branch = nullptr;
    for (const std::uint32_t& s : sets) {
      if ((s & chosen) == 0 && (!branch || std::popcount(s) < std::popcount(*branch))) {
        branch = &s;
      }
    }
    if (!branch) {
      best = chosen;
      best_size = size;
      return;
    }
    if (size + 1 >= best_size) return;
    for (std::uint32_t t = *branch; t; t &= t - 1) rec(chosen | (t & -t));
  };
  rec(0);
  return best;
}

/// f(G, M) recomputed as a minimum hitting set of the M-edges of every
/// M-alternating cycle. Independent of the subset search; used to cross-check.
inline ForcingResult forcing_number_by_hitting_set(const Graph& g, const Matching& m,
                                                   const Limits& limits = {}) {
  const auto cycles = alternating_cycles(g, m, limits);
  std::vector<std::uint32_t> sets;
  sets.reserve(cycles.size());
  for (const auto& c : cycles) sets.push_back(detail::m_edge_mask(m, c));
  const std::uint32_t hit = minimum_hitting_set(sets, limits);
  ForcingResult r;
  r.witness_matching = m;
  r.method = Method::kCycleHitting;
  for (int i = 0; i < m.size(); ++i) {
    if ((hit >> i) & 1U) r.witness_set.push_back(m.edges()[i]);
  }
  r.value = static_cast<int>(r.witness_set.size());
  return r;
}

/// C(G, M): the maximum number of vertex-disjoint M-alternating cycles.
/// Exact set packing that branches on the lowest still-coverable vertex.
inline int cycle_packing(const Graph& g, const Matching& m, const Limits& limits = {}) {
  const auto cycles = alternating_cycles(g, m, limits);
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const auto& c : cycles) sets.push_back(c.vertex_set());
  int best = 0;
  long long nodes = 0;
  std::function<void(VertexSet, int)> rec = [&](VertexSet avail, int count) {
    detail::count_node(nodes, limits);
    VertexSet coverable = 0;
    for (VertexSet s : sets) {
      if ((s & avail) == s) coverable |= s;
    }
    if (count + popcount(coverable) / 4 <= best) return;
    if (!coverable) {
      best = std::max(best, count);
      return;
    }
    const int v = lowest(coverable);
    for (VertexSet s : sets) {
      if ((s & avail) == s && (s >> v) & 1U) rec(avail & ~s, count + 1);
    }
    rec(coverable & ~bit(v), count);
  };
  rec(g.vertices(), 0);
  return best;
}

namespace detail {

/// Can every M-alternating cycle of h be broken by deleting at most `budget`
/// edges, each taken from `choosable` (adjacency rows of non-M edges)?
class AntiForcingSearch {
 public:
  AntiForcingSearch(const Matching& m, const Limits& limits) : m_(m), limits_(limits) {}

  bool feasible(const Graph& h, const Graph& choosable, int budget) {
    count_node(nodes_, limits_);
    PmOracle oracle(h);
    const auto other = oracle.other_than(h.vertices(), m_);
    if (!other) return true;
    if (budget == 0) return false;
    const auto first = difference_cycles(m_, *other);
    if (lower_bound(h, first) > budget) return false;

    const auto shortest = std::min_element(
        first.begin(), first.end(),
        [](const AlternatingCycle& a, const AlternatingCycle& b) { return a.length() < b.length(); });
    Graph allowed = choosable;
    for (const Edge& e : shortest->non_m_edges) {
      if (!allowed.adjacent(e.u, e.v)) continue;
      const Edge one[] = {e};
      allowed = allowed.without_edges(one);
      if (feasible(h.without_edges(one), allowed, budget - 1)) return true;
    }
    return false;
  }

  /// Greedy count of alternating cycles with pairwise disjoint non-M edge sets.
  int lower_bound(Graph h, const std::vector<AlternatingCycle>& seed) {
    int count = 0;
    std::vector<AlternatingCycle> batch = seed;
    while (!batch.empty()) {
      for (const auto& c : batch) {
        ++count;
        h = h.without_edges(c.non_m_edges);
      }
      PmOracle oracle(h);
      const auto other = oracle.other_than(h.vertices(), m_);
      batch = other ? difference_cycles(m_, *other) : std::vector<AlternatingCycle>{};
    }
    return count;
  }

 private:
  const Matching& m_;
  const Limits& limits_;
  long long nodes_ = 0;
};

}  // namespace detail

/// af(G, M): fewest edges outside M whose deletion leaves M as the unique
/// perfect matching. Iterative deepening on the size with a branch over the
/// non-M edges of an unbroken alternating cycle, bounded below by a greedy
/// edge-disjoint cycle count; the lexicographically first optimal set is
/// then fixed edge by edge.
inline ForcingResult anti_forcing_number(const Graph& g, const Matching& m,
                                         const Limits& limits = {}) {
  require_perfect(g, m);
  std::vector<Edge> non_m;
  for (const Edge& e : g.edges()) {
    if (!m.contains(e)) non_m.push_back(e);
  }
  const Graph all_choosable(g.order(), non_m);
  detail::AntiForcingSearch search(m, limits);

  int value = 0;
  {
    detail::PmOracle oracle(g);
    if (const auto other = oracle.other_than(g.vertices(), m)) {
      value = search.lower_bound(g, detail::difference_cycles(m, *other));
    }
  }
  while (!search.feasible(g, all_choosable, value)) ++value;

  ForcingResult r;
  r.value = value;
  r.witness_matching = m;
  r.method = Method::kSubsetSearch;
  Graph h = g;
  Graph choosable = all_choosable;
  int budget = value;
  for (const Edge& e : non_m) {
    if (budget == 0) break;
    const Edge one[] = {e};
    choosable = choosable.without_edges(one);
    const Graph without = h.without_edges(one);
    if (search.feasible(without, choosable, budget - 1)) {
      r.witness_set.push_back(e);
      h = without;
      --budget;
    }
  }
  return r;
}

struct MatchingForcing {
  Matching matching;
  int forcing = 0;
  std::vector<Edge> witness;
};

struct SpectrumOptions {
  bool packing = true;
  bool anti_forcing = false;
};

/// f(G, M) for every perfect matching, in enumeration order.
struct SpectrumReport {
  std::vector<MatchingForcing> per_matching;
  int f_min = 0;
  int f_max = 0;
  /// C(G, M) per matching, parallel to per_matching (empty when not requested).
  std::vector<int> c_values;
  /// af(G, M) per matching (empty when not requested).
  std::vector<int> af_values;

  int max_anti_forcing() const {
    return af_values.empty() ? 0 : *std::max_element(af_values.begin(), af_values.end());
  }
};

inline SpectrumReport spectrum(const Graph& g, const Limits& limits = {},
                               const SpectrumOptions& options = {}) {
  if (g.order() % 2 != 0) throw GraphError("spectrum needs an even order");
  const auto matchings = all_perfect_matchings(g, limits);
  if (matchings.empty()) throw GraphError("graph has no perfect matching");
  SpectrumReport report;
  report.f_min = g.order();
  for (const Matching& m : matchings) {
    ForcingResult r = forcing_number(g, m, limits);
    report.f_min = std::min(report.f_min, r.value);
    report.f_max = std::max(report.f_max, r.value);
    if (options.packing) report.c_values.push_back(cycle_packing(g, m, limits));
    if (options.anti_forcing) report.af_values.push_back(anti_forcing_number(g, m, limits).value);
    report.per_matching.push_back({m, r.value, std::move(r.witness_set)});
  }
  return report;
}

/// Af(G): the largest anti-forcing number over all perfect matchings.
inline int max_anti_forcing(const Graph& g, const Limits& limits = {}) {
  const auto matchings = all_perfect_matchings(g, limits);
  if (matchings.empty()) throw GraphError("graph has no perfect matching");
  int best = 0;
  for (const Matching& m : matchings) best = std::max(best, anti_forcing_number(g, m, limits).value);
  return best;
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_FORCING_HPP_

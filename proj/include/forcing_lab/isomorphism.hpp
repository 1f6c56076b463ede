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

#ifndef FORCING_LAB_ISOMORPHISM_HPP_
#define FORCING_LAB_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forcing_lab/graph.hpp"

namespace forcing_lab {

/// Largest order for which the verifier falls back to permutation search.
inline constexpr int kIsomorphismFallbackCap = 12;

namespace detail {

inline int distinct_count(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

/// Stable vertex colors from iterated neighborhood refinement, starting from
/// degrees. A color is the rank of an isomorphism-invariant signature.
inline std::vector<int> refine_colors(const Graph& g) {
  std::vector<int> color(g.order());
  for (int v = 0; v < g.order(); ++v) color[v] = g.degree(v);
  color = [&] {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranked(g.order());
    for (int v = 0; v < g.order(); ++v) {
      ranked[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), color[v]) - sorted.begin());
    }
    return ranked;
  }();
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(g.order());
    for (int v = 0; v < g.order(); ++v) {
      sig[v].first = color[v];
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) sig[v].second.push_back(color[lowest(s)]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(g.order());
    for (int v = 0; v < g.order(); ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const bool stable = detail::distinct_count(next) == detail::distinct_count(color);
    color = std::move(next);
    if (stable) return color;
  }
}

/// Canonical relabeling: among orderings that list vertices by refined
/// color, the one whose graph6 bit string is lexicographically smallest.
/// Returns perm with perm[v] = new label of v.
inline std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.order();
  const std::vector<int> color = refine_colors(g);
  std::vector<int> target = color;
  std::sort(target.begin(), target.end());

  // Column j of the graph6 bit string: x(0,j) ... x(j-1,j), first bit highest.
  std::vector<std::uint32_t> best(n), cur(n);
  std::vector<int> placed(n), best_placed(n);
  bool have = false;
  auto dfs = [&](auto&& self, int p, VertexSet used) -> void {
    if (p == n) {
      if (!have || cur < best) {
        best = cur;
        best_placed = placed;
        have = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U || color[v] != target[p]) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 1) | (g.adjacent(placed[i], v) ? 1U : 0U);
      cur[p] = col;
      if (have && std::lexicographical_compare(best.begin(), best.begin() + p + 1, cur.begin(),
                                               cur.begin() + p + 1)) {
        continue;
      }
      placed[p] = v;
      self(self, p + 1, used | bit(v));
    }
  };
  dfs(dfs, 0, 0);
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[best_placed[p]] = p;
  return perm;
}

inline Graph canonical_form(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return g.permuted(perm);
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

/// Exact isomorphism test by canonical forms. Undecided (nullopt) above
/// `cap` vertices unless cheap invariants already differ.
inline std::optional<bool> is_isomorphic(const Graph& a, const Graph& b,
                                         int cap = kIsomorphismFallbackCap) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  if (a.order() > cap) return std::nullopt;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_ISOMORPHISM_HPP_

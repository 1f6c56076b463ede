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

#ifndef FORCING_LAB_BOUNDS_HPP_
#define FORCING_LAB_BOUNDS_HPP_

#include <optional>

#include "forcing_lab/classes.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/rational.hpp"

// Closed-form bounds on forcing numbers for a graph of order 2n with e
// edges. Everything is exact: square-root bounds are Surd values compared by
// squaring after a sign split.

namespace forcing_lab::bounds {

/// Edges of a bipartite graph with a unique perfect matching.
inline long long unique_pm_bipartite_max_edges(long long n) { return n * (n + 1) / 2; }

/// Edges of any graph with a unique perfect matching.
inline long long unique_pm_max_edges(long long n) { return n * n; }

/// Edges of a graph with f(G) = k.
inline long long min_forcing_max_edges(long long n, long long k) {
  return n * n + 2 * n * k - k * k - k;
}

/// Edges of a bipartite graph with f(G) = k.
inline long long min_forcing_bipartite_max_edges(long long n, long long k) {
  return (n - k) * (n + k + 1) / 2 + n * k;
}

/// f(G) >= n - 1/2 - sqrt(2n^2 - n - e + 1/4).
inline Surd min_forcing_lower(long long n, long long e) {
  return {Rational(2 * n - 1, 2), Rational(-1, 2), 8 * n * n - 4 * n - 4 * e + 1};
}

/// Bipartite: f(G) >= n - 1/2 - sqrt(2n^2 - 2e + 1/4). Needs e <= n^2.
inline Surd min_forcing_bipartite_lower(long long n, long long e) {
  return {Rational(2 * n - 1, 2), Rational(-1, 2), 8 * n * n - 8 * e + 1};
}

/// Bipartite: f(G) >= delta - 1.
inline long long min_forcing_degree_lower_bipartite(long long delta) { return delta - 1; }

/// Split graphs and cographs: f(G) >= (delta - 1) / 2.
inline Rational min_forcing_degree_lower_split_cograph(long long delta) {
  return {delta - 1, 2};
}

/// Connected graphs: F(G) <= (e - n)/2 when e >= 3n - 2, else e - 2n + 1.
inline Rational max_forcing_upper_connected(long long n, long long e) {
  return e >= 3 * n - 2 ? Rational(e - n, 2) : Rational(e - 2 * n + 1);
}

/// F(G) <= (e - n)/2.
inline Rational max_forcing_upper_edges(long long n, long long e) { return {e - n, 2}; }

/// Some uv in M has d(u) + d(v) >= 2n / (n - k) when f(G, M) = k.
inline Rational matched_degree_sum_lower(long long n, long long k) { return {2 * n, n - k}; }

/// e(G) >= n(n+1)/(n-k) - k - 1 when F(G) = k.
inline Rational max_forcing_min_edges(long long n, long long k) {
  return Rational(n * (n + 1), n - k) - Rational(k + 1);
}

/// F(G) <= (sqrt(e^2 + 2(n+1)e - 3n^2 - 2n + 1) - (e + 1 - n)) / 2.
inline Surd max_forcing_upper(long long n, long long e) {
  return {Rational(-(e + 1 - n), 2), Rational(1, 2), e * e + 2 * (n + 1) * e - 3 * n * n - 2 * n + 1};
}

/// Conjectured: e(G) >= n^2 / (n - F(G)).
inline Rational conjectured_min_edges(long long n, long long big_f) { return {n * n, n - big_f}; }

/// Conjectured, rearranged: F(G) <= (ne - n^2) / e.
inline Rational conjectured_max_forcing_upper(long long n, long long e) {
  return {n * e - n * n, e};
}

/// Af(G) <= r(G) = e - v + 1 for connected G.
inline long long anti_forcing_upper_cyclomatic(long long v, long long e) { return e - v + 1; }

/// Af(G) <= (2e - v) / 4.
inline Rational anti_forcing_upper_edges(long long v, long long e) { return {2 * e - v, 4}; }

}  // namespace forcing_lab::bounds

namespace forcing_lab {

/// Every closed-form bound evaluated on one graph. Optional fields are set
/// only when the bound's hypothesis (bipartite, connected, split or cograph)
/// holds.
struct BoundValues {
  int n = 0;
  int e = 0;
  int delta = 0;
  bool bipartite = false;
  bool connected = false;
  bool split = false;
  bool cograph = false;

  Surd f_lower_general{0};
  std::optional<Surd> f_lower_bipartite;
  std::optional<long long> f_lower_degree_bipartite;
  std::optional<Rational> f_lower_degree_split_cograph;
  std::optional<Rational> big_f_upper_connected;
  Rational big_f_upper_edges;
  Surd big_f_upper{0};
  Rational big_f_upper_conjectured;
};

inline BoundValues bound_values(const Graph& g) {
  if (g.order() < 2 || g.order() % 2 != 0) throw GraphError("bounds need an even order >= 2");
  if (g.edge_count() < 1) throw GraphError("bounds need at least one edge");
  BoundValues b;
  b.n = g.order() / 2;
  b.e = g.edge_count();
  b.delta = g.min_degree();
  b.bipartite = is_bipartite(g);
  b.connected = is_connected(g);
  b.split = is_split(g);
  b.cograph = is_cograph(g);
  b.f_lower_general = bounds::min_forcing_lower(b.n, b.e);
  if (b.bipartite && static_cast<long long>(b.e) <= static_cast<long long>(b.n) * b.n) {
    b.f_lower_bipartite = bounds::min_forcing_bipartite_lower(b.n, b.e);
  }
  if (b.bipartite) b.f_lower_degree_bipartite = bounds::min_forcing_degree_lower_bipartite(b.delta);
  if (b.split || b.cograph) {
    b.f_lower_degree_split_cograph = bounds::min_forcing_degree_lower_split_cograph(b.delta);
  }
  if (b.connected) b.big_f_upper_connected = bounds::max_forcing_upper_connected(b.n, b.e);
  b.big_f_upper_edges = bounds::max_forcing_upper_edges(b.n, b.e);
  b.big_f_upper = bounds::max_forcing_upper(b.n, b.e);
  b.big_f_upper_conjectured = bounds::conjectured_max_forcing_upper(b.n, b.e);
  return b;
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_BOUNDS_HPP_

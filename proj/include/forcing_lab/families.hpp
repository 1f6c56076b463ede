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

#ifndef FORCING_LAB_FAMILIES_HPP_
#define FORCING_LAB_FAMILIES_HPP_

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

// Labeling conventions shared by the bipartite families: with sides of size
// n, u_i is vertex i - 1 and v_i is vertex n + i - 1 (1-based i).

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

inline int u_of(int i) { return i - 1; }
inline int v_of(int n, int i) { return n + i - 1; }

}  // namespace detail

/// H_{n,k}: K_{n,n} minus u_i v_j for 1 <= i < j <= n - k.
inline Graph make_H(int n, int k) {
  detail::require(n >= 1 && k >= 0 && k <= n - 1, "H needs 0 <= k <= n-1");
  check_order(2 * n);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < j && j <= n - k) continue;
      edges.emplace_back(detail::u_of(i), detail::v_of(n, j));
    }
  }
  return Graph(2 * n, edges);
}

/// H_{n,0} with the V side completed to a clique.
inline Graph make_H_hat(int n) {
  detail::require(n >= 1, "Hhat needs n >= 1");
  const Graph h = make_H(n, 0);
  std::vector<Edge> clique;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) clique.emplace_back(detail::v_of(n, i), detail::v_of(n, j));
  }
  return h.with_edges(clique);
}

/// Hhat_{n-k,0} on vertices 0..2(n-k)-1 joined with K_{2k} on the rest.
inline Graph make_H_hat_join(int n, int k) {
  detail::require(n >= 1 && k >= 0 && k <= n - 1, "HhatJoin needs 0 <= k <= n-1");
  check_order(2 * n);
  return join(make_H_hat(n - k), complete_graph(2 * k));
}

/// (n-k)K_2 on pairs (2i, 2i+1) joined with K_{2k}.
inline Graph make_matching_join(int n, int k) {
  detail::require(n >= 1 && k >= 0 && k <= n - 1, "MJoin needs 0 <= k <= n-1");
  check_order(2 * n);
  return join(matching_graph(n - k), complete_graph(2 * k));
}

/// Hhat^+_{n-k,0} (Hhat plus u_i v_{i+1}) joined with K_{2k}.
inline Graph make_G4(int n, int k) {
  detail::require(n >= 2 && k >= 0 && k <= n - 2, "G4 needs 0 <= k <= n-2");
  check_order(2 * n);
  const int m = n - k;
  std::vector<Edge> extra;
  for (int i = 1; i <= m - 1; ++i) extra.emplace_back(detail::u_of(i), detail::v_of(m, i + 1));
  return join(make_H_hat(m).with_edges(extra), complete_graph(2 * k));
}

/// H_{n,k} plus u_i v_{n-k-1}, u_i v_{n-k}, u_{i+1} v_{n-k}.
inline Graph make_G5(int n, int k, int i) {
  detail::require(k >= 0 && i >= 1 && i <= n - k - 2, "G5 needs 1 <= i <= n-k-2");
  check_order(2 * n);
  const std::vector<Edge> extra = {
      {detail::u_of(i), detail::v_of(n, n - k - 1)},
      {detail::u_of(i), detail::v_of(n, n - k)},
      {detail::u_of(i + 1), detail::v_of(n, n - k)},
  };
  return make_H(n, k).with_edges(extra);
}

/// K_{n,n} minus the edges of disjoint K_{a,b}'s, each placed on the lowest
/// unused indices of its side, in the given order.
inline Graph make_G1_member(int n, const std::vector<std::pair<int, int>>& deleted) {
  detail::require(n >= 1, "G1 needs n >= 1");
  detail::require(!deleted.empty(), "G1 member needs at least one deleted subgraph");
  check_order(2 * n);
  int used_u = 0;
  int used_v = 0;
  std::vector<Edge> removed;
  for (const auto& [a, b] : deleted) {
    detail::require(a >= 1 && b >= 1, "deleted subgraph sides must be nonempty");
    detail::require(a + b <= n, "deleted subgraph order exceeds n");
    detail::require(used_u + a <= n && used_v + b <= n, "deleted subgraphs overlap");
    for (int x = 0; x < a; ++x) {
      for (int y = 0; y < b; ++y) removed.emplace_back(used_u + x, n + used_v + y);
    }
    used_u += a;
    used_v += b;
  }
  return complete_bipartite(n, n).without_edges(removed);
}

/// K_{a,a} on U1 = {0..a-1}, V1 = {n..n+a-1} and K_{b,b} on
/// U2 = {a..n-1}, V2 = {n+a..2n-1}, n = a + b, plus cross edges which must
/// go U1-V2 or U2-V1 and must stay forbidden.
inline Graph make_G2_member(int a, int b, const std::vector<Edge>& cross) {
  detail::require(a >= 1 && b >= 1, "G2 parts must be nonempty");
  const int n = a + b;
  check_order(2 * n);
  auto in_u1 = [&](int x) { return x >= 0 && x < a; };
  auto in_u2 = [&](int x) { return x >= a && x < n; };
  auto in_v1 = [&](int x) { return x >= n && x < n + a; };
  auto in_v2 = [&](int x) { return x >= n + a && x < 2 * n; };
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < a; ++y) edges.emplace_back(x, n + y);
  }
  for (int x = 0; x < b; ++x) {
    for (int y = 0; y < b; ++y) edges.emplace_back(a + x, n + a + y);
  }
  for (const Edge& e : cross) {
    detail::require((in_u1(e.u) && in_v2(e.v)) || (in_u2(e.u) && in_v1(e.v)),
                    "cross edge must join U of one part to V of the other");
    edges.push_back(e);
  }
  Graph g(2 * n, edges);
  detail::PmOracle oracle(g);
  for (const Edge& e : cross) {
    if (oracle.exists(g.vertices() & ~e.ends())) {
      throw GraphError("cross edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is allowed, so the graph is not a G2 member");
    }
  }
  return g;
}

inline Graph make_grid(int a, int b) { return cartesian_product(path_graph(a), path_graph(b)); }
inline Graph make_torus(int a, int b) { return cartesian_product(cycle_graph(a), cycle_graph(b)); }
inline Graph make_cylinder(int a, int b) { return cartesian_product(path_graph(a), cycle_graph(b)); }

/// Every deletion list (a_1,b_1) >= (a_2,b_2) >= ... that yields a G1
/// member on sides of size n.
inline std::vector<std::vector<std::pair<int, int>>> g1_deletion_lists(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int left_u, int left_v, std::pair<int, int> cap) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int a = 1; a <= left_u; ++a) {
      for (int b = 1; b <= left_v && a + b <= n; ++b) {
        if (std::make_pair(a, b) > cap) continue;
        cur.emplace_back(a, b);
        self(self, left_u - a, left_v - b, std::make_pair(a, b));
        cur.pop_back();
      }
    }
  };
  rec(rec, n, n, std::make_pair(n, n));
  return out;
}

/// Every labeled G2 member with a >= b: cross edges form a subset of one
/// direction (U1-V2 or U2-V1); using both directions would make them allowed.
inline std::vector<Graph> all_g2_members(int n) {
  std::vector<Graph> out;
  for (int a = n - 1; a >= 1 && a >= n - a; --a) {
    const int b = n - a;
    std::vector<Edge> forward;
    std::vector<Edge> backward;
    for (int x = 0; x < a; ++x) {
      for (int y = 0; y < b; ++y) forward.emplace_back(x, n + a + y);
    }
    for (int x = 0; x < b; ++x) {
      for (int y = 0; y < a; ++y) backward.emplace_back(a + x, n + y);
    }
    detail::require(forward.size() <= 16, "G2 enumeration is limited to a*b <= 16");
    for (int pass = 0; pass < 2; ++pass) {
      const auto& pool = pass == 0 ? forward : backward;
      for (unsigned mask = pass == 0 ? 0U : 1U; mask < (1U << pool.size()); ++mask) {
        std::vector<Edge> cross;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if ((mask >> i) & 1U) cross.push_back(pool[i]);
        }
        out.push_back(make_G2_member(a, b, cross));
      }
    }
  }
  return out;
}

enum class Family {
  kH,
  kHHat,
  kHHatJoin,
  kMatchingJoin,
  kG4,
  kG5,
  kG1,
  kG2,
  kGrid,
  kTorus,
  kCylinder,
  kHypercube,
  kKnn,
  kNK2,
  kPath,
  kCycle,
  kComplete,
  kKab,
};

/// Parameterized family instance. Text form "name:params", e.g. "H:6,2",
/// "G1:3;1x1,1x2", "G2:2,1;0-5", "grid:4x4", "Q:3". The forms "G1:n" and
/// "G2:n" (no parts) denote the whole family at that n.
struct FamilySpec {
  Family family = Family::kH;
  std::vector<int> params;
  std::vector<std::pair<int, int>> parts;
  std::vector<Edge> cross_edges;
  bool whole_family = false;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

struct FamilyName {
  Family family;
  std::string_view name;
  int arity;  // number of integer params; -1 for structured forms
  char sep;   // separator between params
};

inline constexpr FamilyName kFamilyNames[] = {
    {Family::kH, "H", 2, ','},           {Family::kHHat, "Hhat", 1, ','},
    {Family::kHHatJoin, "HhatJoin", 2, ','}, {Family::kMatchingJoin, "MJoin", 2, ','},
    {Family::kG4, "G4", 2, ','},         {Family::kG5, "G5", 3, ','},
    {Family::kG1, "G1", -1, ','},        {Family::kG2, "G2", -1, ','},
    {Family::kGrid, "grid", 2, 'x'},     {Family::kTorus, "torus", 2, 'x'},
    {Family::kCylinder, "cyl", 2, 'x'},  {Family::kHypercube, "Q", 1, ','},
    {Family::kKnn, "Knn", 1, ','},       {Family::kNK2, "nK2", 1, ','},
    {Family::kPath, "path", 1, ','},     {Family::kCycle, "cycle", 1, ','},
    {Family::kComplete, "K", 1, ','},    {Family::kKab, "Kab", 2, ','},
};

inline const FamilyName& family_name(Family f) {
  for (const auto& fn : kFamilyNames) {
    if (fn.family == f) return fn;
  }
  throw ParseError("unknown family");
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

inline int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "' in family spec '" + std::string(whole) + "'");
  }
  return value;
}

inline std::vector<int> parse_ints(std::string_view s, char sep, std::string_view whole) {
  std::vector<int> out;
  for (auto tok : split(s, sep)) out.push_back(parse_int(tok, whole));
  return out;
}

}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  const detail::FamilyName* fn = nullptr;
  for (const auto& candidate : detail::kFamilyNames) {
    if (candidate.name == name) fn = &candidate;
  }
  if (!fn) throw ParseError("unknown family '" + std::string(name) + "'");
  FamilySpec spec;
  spec.family = fn->family;
  if (fn->arity >= 0) {
    spec.params = detail::parse_ints(body, fn->sep, text);
    if (static_cast<int>(spec.params.size()) != fn->arity) {
      throw ParseError("family '" + std::string(name) + "' takes " + std::to_string(fn->arity) +
                       " parameters");
    }
    return spec;
  }
  const auto pieces = detail::split(body, ';');
  if (pieces.size() > 2) throw ParseError("too many ';' in '" + std::string(text) + "'");
  if (spec.family == Family::kG1) {
    spec.params = {detail::parse_int(pieces[0], text)};
    if (pieces.size() == 1) {
      spec.whole_family = true;
      return spec;
    }
    for (auto tok : detail::split(pieces[1], ',')) {
      const auto ab = detail::parse_ints(tok, 'x', text);
      if (ab.size() != 2) throw ParseError("deleted part must look like AxB in '" + std::string(text) + "'");
      spec.parts.emplace_back(ab[0], ab[1]);
    }
    return spec;
  }
  // G2
  spec.params = detail::parse_ints(pieces[0], ',', text);
  if (spec.params.size() == 1 && pieces.size() == 1) {
    spec.whole_family = true;
    return spec;
  }
  if (spec.params.size() != 2) throw ParseError("G2 takes part sizes 'a,b' in '" + std::string(text) + "'");
  if (pieces.size() == 2 && !pieces[1].empty()) {
    for (auto tok : detail::split(pieces[1], ',')) {
      const auto uv = detail::parse_ints(tok, '-', text);
      if (uv.size() != 2) throw ParseError("cross edge must look like U-V in '" + std::string(text) + "'");
      spec.cross_edges.emplace_back(uv[0], uv[1]);
    }
  }
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  const auto& fn = detail::family_name(spec.family);
  std::string out(fn.name);
  out += ':';
  auto join_ints = [&](char sep) {
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(spec.params[i]);
    }
  };
  join_ints(fn.sep);
  if (spec.whole_family) return out;
  if (spec.family == Family::kG1) {
    out += ';';
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.parts[i].first) + "x" + std::to_string(spec.parts[i].second);
    }
  } else if (spec.family == Family::kG2 && !spec.cross_edges.empty()) {
    out += ';';
    for (std::size_t i = 0; i < spec.cross_edges.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.cross_edges[i].u) + "-" + std::to_string(spec.cross_edges[i].v);
    }
  }
  return out;
}

/// Every graph denoted by the spec: one graph, or the whole family for the
/// "G1:n" / "G2:n" forms.
inline std::vector<Graph> build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kH: return {make_H(p[0], p[1])};
    case Family::kHHat: return {make_H_hat(p[0])};
    case Family::kHHatJoin: return {make_H_hat_join(p[0], p[1])};
    case Family::kMatchingJoin: return {make_matching_join(p[0], p[1])};
    case Family::kG4: return {make_G4(p[0], p[1])};
    case Family::kG5: return {make_G5(p[0], p[1], p[2])};
    case Family::kG1: {
      if (!spec.whole_family) return {make_G1_member(p[0], spec.parts)};
      std::vector<Graph> out;
      for (const auto& parts : g1_deletion_lists(p[0])) out.push_back(make_G1_member(p[0], parts));
      return out;
    }
    case Family::kG2:
      if (spec.whole_family) return all_g2_members(p[0]);
      return {make_G2_member(p[0], p[1], spec.cross_edges)};
    case Family::kGrid: return {make_grid(p[0], p[1])};
    case Family::kTorus: return {make_torus(p[0], p[1])};
    case Family::kCylinder: return {make_cylinder(p[0], p[1])};
    case Family::kHypercube: return {hypercube(p[0])};
    case Family::kKnn: return {complete_bipartite(p[0], p[0])};
    case Family::kNK2: return {matching_graph(p[0])};
    case Family::kPath: return {path_graph(p[0])};
    case Family::kCycle: return {cycle_graph(p[0])};
    case Family::kComplete: return {complete_graph(p[0])};
    case Family::kKab: return {complete_bipartite(p[0], p[1])};
  }
  throw GraphError("unknown family");
}

inline Graph build_graph(const FamilySpec& spec) {
  const auto graphs = build_family(spec);
  if (graphs.size() != 1) throw GraphError("spec '" + to_string(spec) + "' denotes several graphs");
  return graphs.front();
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_FAMILIES_HPP_

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

#ifndef FORCING_LAB_VERIFIER_HPP_
#define FORCING_LAB_VERIFIER_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forcing_lab/bounds.hpp"
#include "forcing_lab/classes.hpp"
#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/graph6.hpp"
#include "forcing_lab/isomorphism.hpp"
#include "forcing_lab/matching.hpp"
#include "forcing_lab/rational.hpp"

namespace forcing_lab {

// Theorem identifiers. Stable strings: they key the report and sort order.
namespace theorem {
inline constexpr std::string_view kNoPerfectMatching = "PM_REQUIRED";
inline constexpr std::string_view kSolver = "SOLVER";
inline constexpr std::string_view kUniqueBipartite = "THM_1_4";
inline constexpr std::string_view kUnique = "THM_1_5";
inline constexpr std::string_view kSizeGeneral = "THM_2_1";
inline constexpr std::string_view kSizeGeneralInverse = "COR_2_2";
inline constexpr std::string_view kSizeBipartite = "THM_2_3";
inline constexpr std::string_view kSizeBipartiteInverse = "COR_2_4";
inline constexpr std::string_view kDegreeBipartite = "THM_2_5";
inline constexpr std::string_view kDegreeSplitCograph = "THM_2_8";
inline constexpr std::string_view kAntiForcingPiecewise = "COR_3_1";
inline constexpr std::string_view kEdgesUpper = "PROP_3_2";
inline constexpr std::string_view kMatchedDegreeSum = "LEM_3_3";
inline constexpr std::string_view kMaxForcingEdges = "THM_3_4";
inline constexpr std::string_view kMaxForcingUpper = "COR_3_5";
inline constexpr std::string_view kForcingBelowAnti = "F_LE_AF";
inline constexpr std::string_view kAntiCyclomatic = "AF_LE_R";
inline constexpr std::string_view kAntiEdges = "AF_LE_EDGES";
inline constexpr std::string_view kCrossover = "REM_3_6";
inline constexpr std::string_view kCompleteBipartite = "THM_4_2";
inline constexpr std::string_view kFNMinus1 = "THM_4_3";
inline constexpr std::string_view kFNMinus2 = "THM_4_5";
inline constexpr std::string_view kIndependence = "LEM_4_6";
inline constexpr std::string_view kEveryMatchingNMinus2 = "REM_4_8";
inline constexpr std::string_view kDisconnectedMembers = "REM_4_9";
inline constexpr std::string_view kElementaryG1 = "PROP_4_10";
inline constexpr std::string_view kConjecture = "CONJ_5_1";
inline constexpr std::string_view kConjectureSmallF = "PROP_5_2";
inline constexpr std::string_view kConjectureLargeF = "PROP_5_3";
inline constexpr std::string_view kMinimax = "PK_MINIMAX";
inline constexpr std::string_view kKnownValue = "KNOWN_VALUE";
}  // namespace theorem

enum class Status { kPass, kFail, kInapplicable, kCounterexample, kAborted };
enum class EqualityCase { kStrict, kMatchesExtremal, kMismatch, kNotApplicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kInapplicable: return "inapplicable";
    case Status::kCounterexample: return "counterexample";
    case Status::kAborted: return "aborted";
  }
  return "?";
}

inline const char* to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::kStrict: return "strict";
    case EqualityCase::kMatchesExtremal: return "equality_matches_extremal";
    case EqualityCase::kMismatch: return "equality_mismatch";
    case EqualityCase::kNotApplicable: return "n/a";
  }
  return "?";
}

/// Invariants of the graph a record was computed on. Quantities that need a
/// perfect matching are -1 when there is none; r is -1 when disconnected.
struct GraphInputs {
  int n = 0;
  int e = 0;
  int f = -1;
  int big_f = -1;
  int delta = 0;
  int af = -1;
  int r = -1;
  bool connected = false;
  bool bipartite = false;
  bool split = false;
  bool cograph = false;

  friend bool operator==(const GraphInputs&, const GraphInputs&) = default;
};

/// One statement checked on one graph.
struct VerdictRecord {
  std::string theorem_id;
  std::string graph_id;
  GraphInputs inputs;
  /// Exact bound (rational or quadratic surd), as text.
  std::string bound;
  double bound_approx = 0.0;
  long long observed = 0;
  Status status = Status::kInapplicable;
  EqualityCase equality = EqualityCase::kNotApplicable;
  std::string detail;
  /// Reproduction payload on fail / counterexample: matchings with their
  /// forcing numbers.
  std::vector<MatchingForcing> witnesses;
};

// ---------------------------------------------------------------------------
// Extremal graph recognition.

/// Bipartite chain-graph test for H_{n,k}: the U-side neighborhoods are
/// nested and the U degrees are {k+1, ..., n, n, ..., n}. Chain graphs are
/// determined up to isomorphism by one side's degree multiset.
inline bool matches_H(const Graph& g, int n, int k) {
  if (g.order() != 2 * n || !is_connected(g)) return false;
  const auto b = bipartition_of(g);
  if (!b || !b->balanced()) return false;
  std::vector<int> target;
  for (int l = 1; l <= n; ++l) target.push_back(l <= n - k ? k + l : n);
  std::sort(target.begin(), target.end());
  for (const VertexSet side : {b->side_u, b->side_v}) {
    std::vector<VertexSet> hoods;
    std::vector<int> degrees;
    for (VertexSet s = side; s; s &= s - 1) {
      hoods.push_back(g.neighbors(lowest(s)));
      degrees.push_back(g.degree(lowest(s)));
    }
    std::sort(degrees.begin(), degrees.end());
    bool nested = true;
    for (std::size_t i = 0; i < hoods.size() && nested; ++i) {
      for (std::size_t j = i + 1; j < hoods.size() && nested; ++j) {
        const VertexSet x = hoods[i];
        const VertexSet y = hoods[j];
        nested = (x & y) == x || (x & y) == y;
      }
    }
    if (nested && degrees == target) return true;
  }
  return false;
}

/// Threshold graphs reduce to nothing by repeatedly deleting an isolated or
/// a dominating vertex.
inline bool is_threshold(const Graph& g) {
  VertexSet rem = g.vertices();
  while (rem) {
    bool removed = false;
    for (VertexSet s = rem; s; s &= s - 1) {
      const int v = lowest(s);
      const VertexSet nb = g.neighbors(v) & rem;
      if (nb == 0 || nb == (rem & ~bit(v))) {
        rem &= ~bit(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

/// Threshold graphs are determined by their degree sequence, so a threshold
/// target is matched without a permutation search.
inline std::optional<bool> isomorphic_to(const Graph& g, const Graph& target) {
  if (g.order() != target.order() || g.edge_count() != target.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(target)) return false;
  if (is_threshold(target)) return is_threshold(g);
  return is_isomorphic(g, target);
}

/// Every component is a 4-cycle or a single edge.
inline bool is_union_of_c4_and_k2(const Graph& g) {
  for (VertexSet c : components(g)) {
    const Graph h = g.induced(c);
    const bool k2 = h.order() == 2 && h.edge_count() == 1;
    const bool c4 = h.order() == 4 && h.edge_count() == 4 && h.min_degree() == 2 && h.max_degree() == 2;
    if (!k2 && !c4) return false;
  }
  return true;
}

inline bool is_disjoint_union_of_two_complete_bipartite(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() != 2) return false;
  return std::all_of(comps.begin(), comps.end(), [&](VertexSet c) {
    const Graph h = g.induced(c);
    const auto b = bipartition_of(h);
    if (!b || !b->balanced()) return false;
    const int a = popcount(b->side_u);
    return a >= 1 && h.edge_count() == a * a;
  });
}

// ---------------------------------------------------------------------------

namespace detail {

struct Facts {
  Graph g;
  std::string id;
  GraphInputs in;
  SpectrumReport spectrum;
  std::optional<ClassReport> classes;
};

inline VerdictRecord record(const Facts& facts, std::string_view theorem) {
  VerdictRecord r;
  r.theorem_id = std::string(theorem);
  r.graph_id = facts.id;
  r.inputs = facts.in;
  return r;
}

inline void set_bound(VerdictRecord& r, const Surd& s) {
  r.bound = s.to_string();
  r.bound_approx = s.to_double();
}

inline void set_bound(VerdictRecord& r, const Rational& q) {
  r.bound = q.to_string();
  r.bound_approx = q.to_double();
}

inline EqualityCase classify_equality(std::optional<bool> matches) {
  if (!matches) return EqualityCase::kNotApplicable;
  return *matches ? EqualityCase::kMatchesExtremal : EqualityCase::kMismatch;
}

/// Matchings attaining f and F, attached to failing records.
inline std::vector<MatchingForcing> extreme_witnesses(const SpectrumReport& s) {
  std::vector<MatchingForcing> out;
  for (const auto& entry : s.per_matching) {
    if (entry.forcing == s.f_min) {
      out.push_back(entry);
      break;
    }
  }
  for (const auto& entry : s.per_matching) {
    if (entry.forcing == s.f_max) {
      if (!(out.front().matching == entry.matching)) out.push_back(entry);
      break;
    }
  }
  return out;
}

/// Upper-bound record "observed <= bound" for an edge count. An equality
/// must come with the named extremal graph.
inline VerdictRecord edge_upper(const Facts& facts, std::string_view id, long long bound,
                                const Graph& extremal) {
  VerdictRecord r = record(facts, id);
  set_bound(r, Rational(bound));
  r.observed = facts.in.e;
  if (facts.in.e > bound) {
    r.status = Status::kFail;
  } else if (facts.in.e < bound) {
    r.status = Status::kPass;
    r.equality = EqualityCase::kStrict;
  } else {
    const auto matches = isomorphic_to(facts.g, extremal);
    if (!matches) {
      r.status = Status::kAborted;
      r.detail = "isomorphism undecided above the permutation-search cap";
    } else {
      r.equality = classify_equality(matches);
      r.status = *matches ? Status::kPass : Status::kFail;
    }
  }
  return r;
}

/// Record for "f >= surd" whose equality characterizes `extremal`.
inline VerdictRecord forcing_lower_surd(const Facts& facts, std::string_view id, const Surd& bound,
                                        const Graph& extremal) {
  VerdictRecord r = record(facts, id);
  set_bound(r, bound);
  r.observed = facts.in.f;
  const int cmp = bound.compare(facts.in.f);  // sign(bound - f)
  if (cmp > 0) {
    r.status = Status::kFail;
  } else if (cmp < 0) {
    r.status = Status::kPass;
    r.equality = EqualityCase::kStrict;
  } else {
    const auto matches = isomorphic_to(facts.g, extremal);
    r.equality = classify_equality(matches);
    r.status = !matches ? Status::kAborted : (*matches ? Status::kPass : Status::kFail);
  }
  return r;
}

/// "lhs holds iff rhs holds" for the characterization theorems.
inline VerdictRecord iff_record(const Facts& facts, std::string_view id, bool statement,
                                bool predicted, long long observed, long long bound) {
  VerdictRecord r = record(facts, id);
  set_bound(r, Rational(bound));
  r.observed = observed;
  if (statement == predicted) {
    r.status = Status::kPass;
    r.equality = statement ? EqualityCase::kMatchesExtremal : EqualityCase::kStrict;
  } else {
    r.status = Status::kFail;
    r.equality = EqualityCase::kMismatch;
  }
  return r;
}

inline std::optional<bool> matches_max_forcing_tight(const Facts& facts) {
  const int n = facts.in.n;
  if (facts.in.big_f == 0) return facts.in.e == n && facts.g.max_degree() == 1;
  if (facts.in.big_f == n - 1) return matches_H(facts.g, n, n - 1);
  return false;
}

}  // namespace detail

/// Applies every in-scope statement to one graph. The spectrum (with
/// anti-forcing numbers) is computed once; records come out in a fixed order.
inline std::vector<VerdictRecord> verify_graph(const Graph& g, const Limits& limits = {}) {
  namespace th = theorem;
  detail::Facts facts;
  facts.g = g;
  facts.id = graph6_encode(g);
  facts.in.n = g.order() / 2;
  facts.in.e = g.edge_count();
  facts.in.delta = g.min_degree();
  facts.in.connected = is_connected(g);
  facts.in.bipartite = is_bipartite(g);
  facts.in.split = is_split(g);
  facts.in.cograph = is_cograph(g);
  if (facts.in.connected) facts.in.r = cyclomatic_number(g);

  std::vector<VerdictRecord> out;
  if (g.order() == 0 || g.order() % 2 != 0 || !has_perfect_matching(g)) {
    VerdictRecord r = detail::record(facts, th::kNoPerfectMatching);
    r.status = Status::kInapplicable;
    r.detail = "graph has no perfect matching";
    out.push_back(std::move(r));
    return out;
  }
  try {
    facts.spectrum = spectrum(g, limits, {.packing = false, .anti_forcing = true});
  } catch (const ResourceError& err) {
    VerdictRecord r = detail::record(facts, th::kSolver);
    r.status = Status::kAborted;
    r.detail = err.what();
    out.push_back(std::move(r));
    return out;
  }
  const SpectrumReport& sp = facts.spectrum;
  facts.in.f = sp.f_min;
  facts.in.big_f = sp.f_max;
  facts.in.af = sp.max_anti_forcing();
  const int n = facts.in.n;
  const long long e = facts.in.e;
  const int f = sp.f_min;
  const int big_f = sp.f_max;

  auto push = [&](VerdictRecord r) {
    if (r.status == Status::kFail || r.status == Status::kCounterexample) {
      r.witnesses = detail::extreme_witnesses(sp);
    }
    out.push_back(std::move(r));
  };
  auto inapplicable = [&](std::string_view id, std::string why) {
    VerdictRecord r = detail::record(facts, id);
    r.status = Status::kInapplicable;
    r.detail = std::move(why);
    push(std::move(r));
  };

  // Unique perfect matching: size bounds and pendant vertices.
  if (f == 0 && facts.in.bipartite) {
    VerdictRecord r = detail::edge_upper(facts, th::kUniqueBipartite,
                                         bounds::unique_pm_bipartite_max_edges(n), make_H(n, 0));
    const auto b = *bipartition_of(g);
    bool pendant_u = false;
    bool pendant_v = false;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 1) ((b.side_u >> v) & 1U ? pendant_u : pendant_v) = true;
    }
    if (!(pendant_u && pendant_v)) {
      r.status = Status::kFail;
      r.detail = "missing pendant vertex on one side";
    }
    push(std::move(r));
  } else {
    inapplicable(th::kUniqueBipartite, "needs a bipartite graph with a unique perfect matching");
  }
  if (f == 0) {
    push(detail::edge_upper(facts, th::kUnique, bounds::unique_pm_max_edges(n), make_H_hat(n)));
  } else {
    inapplicable(th::kUnique, "needs a unique perfect matching");
  }

  // Size bounds in terms of f.
  const Graph general_extremal = make_H_hat_join(n, f);
  push(detail::edge_upper(facts, th::kSizeGeneral, bounds::min_forcing_max_edges(n, f),
                          general_extremal));
  push(detail::forcing_lower_surd(facts, th::kSizeGeneralInverse, bounds::min_forcing_lower(n, e),
                                  general_extremal));
  if (facts.in.bipartite) {
    const Graph bip_extremal = make_H(n, f);
    push(detail::edge_upper(facts, th::kSizeBipartite, bounds::min_forcing_bipartite_max_edges(n, f),
                            bip_extremal));
    push(detail::forcing_lower_surd(facts, th::kSizeBipartiteInverse,
                                    bounds::min_forcing_bipartite_lower(n, e), bip_extremal));
  } else {
    inapplicable(th::kSizeBipartite, "needs a bipartite graph");
    inapplicable(th::kSizeBipartiteInverse, "needs a bipartite graph");
  }

  // Degree bounds.
  if (facts.in.bipartite) {
    VerdictRecord r = detail::record(facts, th::kDegreeBipartite);
    const long long bound = bounds::min_forcing_degree_lower_bipartite(facts.in.delta);
    detail::set_bound(r, Rational(bound));
    r.observed = f;
    r.status = f >= bound ? Status::kPass : Status::kFail;
    r.equality = f > bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
  } else {
    inapplicable(th::kDegreeBipartite, "needs a bipartite graph");
  }
  if (facts.in.split || facts.in.cograph) {
    VerdictRecord r = detail::record(facts, th::kDegreeSplitCograph);
    const Rational bound = bounds::min_forcing_degree_lower_split_cograph(facts.in.delta);
    detail::set_bound(r, bound);
    r.observed = f;
    r.status = Rational(f) >= bound ? Status::kPass : Status::kFail;
    r.equality = Rational(f) > bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
  } else {
    inapplicable(th::kDegreeSplitCograph, "needs a split graph or a cograph");
  }

  // Upper bounds on F.
  if (facts.in.connected) {
    VerdictRecord r = detail::record(facts, th::kAntiForcingPiecewise);
    const Rational bound = bounds::max_forcing_upper_connected(n, e);
    detail::set_bound(r, bound);
    r.observed = big_f;
    r.status = Rational(big_f) <= bound ? Status::kPass : Status::kFail;
    r.equality = Rational(big_f) < bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
  } else {
    inapplicable(th::kAntiForcingPiecewise, "needs a connected graph");
  }
  {
    VerdictRecord r = detail::record(facts, th::kEdgesUpper);
    const Rational bound = bounds::max_forcing_upper_edges(n, e);
    detail::set_bound(r, bound);
    r.observed = big_f;
    const bool tight = Rational(big_f) == bound;
    const bool structure = is_union_of_c4_and_k2(g);
    if (Rational(big_f) > bound) {
      r.status = Status::kFail;
    } else if (tight != structure) {
      r.status = Status::kFail;
      r.equality = EqualityCase::kMismatch;
    } else {
      r.status = Status::kPass;
      r.equality = tight ? EqualityCase::kMatchesExtremal : EqualityCase::kStrict;
    }
    push(std::move(r));
  }
  {
    // For every M: some edge of M has degree sum >= 2n/(n-k), k = f(G,M);
    // at equality (n-k) | n. Reported for the tightest matching.
    VerdictRecord r = detail::record(facts, th::kMatchedDegreeSum);
    bool ok = true;
    bool any_equal = false;
    std::optional<Rational> tightest_slack;
    for (const auto& entry : sp.per_matching) {
      int best = 0;
      for (const Edge& uv : entry.matching.edges()) best = std::max(best, g.degree(uv.u) + g.degree(uv.v));
      const Rational bound = bounds::matched_degree_sum_lower(n, entry.forcing);
      const Rational slack = Rational(best) - bound;
      if (slack.sign() < 0) ok = false;
      if (slack.sign() == 0) {
        any_equal = true;
        if (n % (n - entry.forcing) != 0) ok = false;
      }
      if (!tightest_slack || slack < *tightest_slack) {
        tightest_slack = slack;
        detail::set_bound(r, bound);
        r.observed = best;
      }
    }
    r.status = ok ? Status::kPass : Status::kFail;
    r.equality = any_equal ? EqualityCase::kNotApplicable : EqualityCase::kStrict;
    push(std::move(r));
  }
  {
    VerdictRecord r = detail::record(facts, th::kMaxForcingEdges);
    const Rational bound = bounds::max_forcing_min_edges(n, big_f);
    detail::set_bound(r, bound);
    r.observed = e;
    if (Rational(e) < bound) {
      r.status = Status::kFail;
    } else {
      r.status = Status::kPass;
      r.equality = Rational(e) > bound ? EqualityCase::kStrict
                                       : detail::classify_equality(detail::matches_max_forcing_tight(facts));
    }
    push(std::move(r));
  }
  {
    VerdictRecord r = detail::record(facts, th::kMaxForcingUpper);
    const Surd bound = bounds::max_forcing_upper(n, e);
    detail::set_bound(r, bound);
    r.observed = big_f;
    const int cmp = bound.compare(big_f);
    if (cmp < 0) {
      r.status = Status::kFail;
    } else {
      r.status = Status::kPass;
      r.equality = cmp > 0 ? EqualityCase::kStrict
                           : detail::classify_equality(detail::matches_max_forcing_tight(facts));
    }
    push(std::move(r));
  }

  // Anti-forcing comparisons.
  {
    VerdictRecord r = detail::record(facts, th::kForcingBelowAnti);
    detail::set_bound(r, Rational(facts.in.af));
    r.observed = big_f;
    r.status = big_f <= facts.in.af ? Status::kPass : Status::kFail;
    r.equality = big_f < facts.in.af ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
  }
  if (facts.in.connected) {
    VerdictRecord r = detail::record(facts, th::kAntiCyclomatic);
    const long long bound = bounds::anti_forcing_upper_cyclomatic(g.order(), e);
    detail::set_bound(r, Rational(bound));
    r.observed = facts.in.af;
    r.status = facts.in.af <= bound ? Status::kPass : Status::kFail;
    r.equality = facts.in.af < bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
    VerdictRecord s = detail::record(facts, th::kAntiEdges);
    const Rational edge_bound = bounds::anti_forcing_upper_edges(g.order(), e);
    detail::set_bound(s, edge_bound);
    s.observed = facts.in.af;
    s.status = Rational(facts.in.af) <= edge_bound ? Status::kPass : Status::kFail;
    s.equality = Rational(facts.in.af) < edge_bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(s));
  } else {
    inapplicable(th::kAntiCyclomatic, "needs a connected graph");
    inapplicable(th::kAntiEdges, "needs a connected graph");
  }

  // Characterizations of f = n - 1 and f = n - 2.
  if (facts.in.bipartite) {
    push(detail::iff_record(facts, th::kCompleteBipartite, f == n - 1, matches_H(g, n, n - 1), f, n - 1));
    VerdictRecord r = detail::record(facts, th::kIndependence);
    detail::set_bound(r, Rational(n));
    r.observed = independence_number(g);
    r.status = r.observed == n ? Status::kPass : Status::kFail;
    push(std::move(r));
  } else {
    inapplicable(th::kCompleteBipartite, "needs a bipartite graph");
    inapplicable(th::kIndependence, "needs a bipartite graph");
  }
  push(detail::iff_record(facts, th::kFNMinus1, f == n - 1, recognize_f_n1(g), f, n - 1));

  if (facts.in.bipartite && n >= 2) {
    facts.classes = classify(g);
    const ClassReport& cr = *facts.classes;
    const bool member = cr.g1_member || cr.g2_member;
    push(detail::iff_record(facts, th::kFNMinus2, f == n - 2, member, f, n - 2));
    push(detail::iff_record(facts, th::kEveryMatchingNMinus2, f == n - 2,
                            f == n - 2 && big_f == n - 2, big_f, n - 2));
    if (member) {
      push(detail::iff_record(facts, th::kDisconnectedMembers, !facts.in.connected,
                              is_disjoint_union_of_two_complete_bipartite(g), facts.in.connected ? 1 : 0, 0));
    } else {
      inapplicable(th::kDisconnectedMembers, "needs a G1 or G2 member");
    }
    if (cr.g1_member) {
      const bool small = std::all_of(cr.deleted_subgraphs.begin(), cr.deleted_subgraphs.end(),
                                     [&](const auto& p) { return p.first + p.second < n; });
      push(detail::iff_record(facts, th::kElementaryG1, cr.is_elementary, small,
                              cr.is_elementary ? 1 : 0, 1));
    } else {
      inapplicable(th::kElementaryG1, "needs a G1 member");
    }
  } else {
    for (auto id : {th::kFNMinus2, th::kEveryMatchingNMinus2, th::kDisconnectedMembers, th::kElementaryG1}) {
      inapplicable(id, "needs a bipartite graph of order >= 4");
    }
  }

  // The conjecture and its proved cases.
  {
    VerdictRecord r = detail::record(facts, th::kConjecture);
    const Rational bound = bounds::conjectured_min_edges(n, big_f);
    detail::set_bound(r, bound);
    r.observed = e;
    const bool holds = Rational(e) >= bound;
    r.status = holds ? Status::kPass : Status::kCounterexample;
    r.equality = Rational(e) > bound ? EqualityCase::kStrict : EqualityCase::kNotApplicable;
    push(std::move(r));
    const bool small_f = 2 * big_f <= n;
    const bool large_f = big_f == n - 1 || big_f == n - 2;
    for (auto [id, applies] : {std::pair{th::kConjectureSmallF, small_f}, std::pair{th::kConjectureLargeF, large_f}}) {
      if (!applies) {
        inapplicable(id, "F outside the proved range");
        continue;
      }
      VerdictRecord p = detail::record(facts, id);
      detail::set_bound(p, bound);
      p.observed = e;
      p.status = holds ? Status::kPass : Status::kFail;
      p.equality = r.equality;
      push(std::move(p));
    }
  }
  return out;
}

/// Whether a graph is exploratory output for the open non-bipartite f = n-2
/// question (no pass/fail meaning).
inline bool is_nonbipartite_f_n_minus_2(const GraphInputs& in) {
  return !in.bipartite && in.f >= 0 && in.f == in.n - 2;
}

/// Decides whether g is the extremal graph named by an equality case.
/// Structural recognizers answer for chain and threshold targets; other
/// targets fall back to permutation search up to 12 vertices.
inline VerdictRecord verify_equality_case(std::string_view theorem_id, const Graph& g,
                                          const Limits& limits = {}) {
  namespace th = theorem;
  VerdictRecord r;
  r.theorem_id = std::string(theorem_id);
  r.graph_id = graph6_encode(g);
  r.inputs.n = g.order() / 2;
  r.inputs.e = g.edge_count();
  if (g.order() % 2 != 0 || !has_perfect_matching(g)) {
    r.status = Status::kInapplicable;
    r.detail = "graph has no perfect matching";
    return r;
  }
  const int n = g.order() / 2;
  const SpectrumReport sp = spectrum(g, limits, {.packing = false});
  r.inputs.f = sp.f_min;
  r.inputs.big_f = sp.f_max;
  const int k = sp.f_min;
  std::optional<Graph> target;
  if (theorem_id == th::kUniqueBipartite) target = make_H(n, 0);
  if (theorem_id == th::kUnique) target = make_H_hat(n);
  if (theorem_id == th::kSizeGeneral || theorem_id == th::kSizeGeneralInverse) target = make_H_hat_join(n, k);
  if (theorem_id == th::kSizeBipartite || theorem_id == th::kSizeBipartiteInverse) target = make_H(n, k);
  if (theorem_id == th::kCompleteBipartite) target = make_H(n, n - 1);
  if (!target) {
    r.status = Status::kInapplicable;
    r.detail = "no named extremal graph for this statement";
    return r;
  }
  r.bound = graph6_encode(*target);
  std::optional<bool> same;
  if (theorem_id == th::kUniqueBipartite || theorem_id == th::kSizeBipartite ||
      theorem_id == th::kSizeBipartiteInverse || theorem_id == th::kCompleteBipartite) {
    const int kk = theorem_id == th::kUniqueBipartite ? 0 : (theorem_id == th::kCompleteBipartite ? n - 1 : k);
    same = matches_H(g, n, kk);
  } else {
    same = isomorphic_to(g, *target);
  }
  if (!same) {
    r.status = Status::kAborted;
    r.detail = "isomorphism undecided above the permutation-search cap";
    return r;
  }
  r.equality = *same ? EqualityCase::kMatchesExtremal : EqualityCase::kMismatch;
  r.status = *same ? Status::kPass : Status::kFail;
  return r;
}

/// Minimax check, f(G,M) = C(G,M) for every perfect
/// matching; only meaningful for graphs constructed as plane bipartite.
inline VerdictRecord verify_minimax(const Graph& g, std::string label, const Limits& limits = {}) {
  VerdictRecord r;
  r.theorem_id = std::string(theorem::kMinimax);
  r.graph_id = graph6_encode(g);
  r.detail = std::move(label);
  r.inputs.n = g.order() / 2;
  r.inputs.e = g.edge_count();
  try {
    const SpectrumReport sp = spectrum(g, limits, {.packing = true});
    r.inputs.f = sp.f_min;
    r.inputs.big_f = sp.f_max;
    long long mismatches = 0;
    for (std::size_t i = 0; i < sp.per_matching.size(); ++i) {
      if (sp.per_matching[i].forcing != sp.c_values[i]) {
        ++mismatches;
        r.witnesses.push_back(sp.per_matching[i]);
      }
    }
    r.bound = "0";
    r.observed = mismatches;
    r.status = mismatches == 0 ? Status::kPass : Status::kFail;
  } catch (const ResourceError& err) {
    r.status = Status::kAborted;
    r.detail += std::string(": ") + err.what();
  }
  return r;
}

struct KnownValue {
  std::string label;
  Graph graph;
  bool minimum;  // f when true, F otherwise
  int expected;
};

/// Closed-form values from the literature at parameters within 32 vertices.
inline std::vector<KnownValue> known_value_table() {
  // P_{2n} x P_{2n}: f = n, F = n^2.  C_{2m} x C_{2n}: f = 2 min(m,n), F = mn.
  // P_{2k} x C_{2n}: F = kn.  P_{2k+1} x C_{2n}: F = kn + 1.
  // P_{2m} x C_{2n+1}: F = m(n+1).  Q_k: f = 2^{k-2}.
  return {
      {"f(P4xP4)", make_grid(4, 4), true, 2},     {"F(P4xP4)", make_grid(4, 4), false, 4},
      {"f(C4xC4)", make_torus(4, 4), true, 4},    {"F(C4xC4)", make_torus(4, 4), false, 4},
      {"f(C4xC6)", make_torus(4, 6), true, 4},    {"F(C4xC6)", make_torus(4, 6), false, 6},
      {"F(P2xC4)", make_cylinder(2, 4), false, 2}, {"F(P2xC6)", make_cylinder(2, 6), false, 3},
      {"F(P4xC4)", make_cylinder(4, 4), false, 4}, {"F(P3xC4)", make_cylinder(3, 4), false, 3},
      {"F(P3xC6)", make_cylinder(3, 6), false, 4}, {"F(P2xC3)", make_cylinder(2, 3), false, 2},
      {"F(P2xC5)", make_cylinder(2, 5), false, 3}, {"F(P4xC3)", make_cylinder(4, 3), false, 4},
      {"f(Q2)", hypercube(2), true, 1},           {"f(Q3)", hypercube(3), true, 2},
      {"f(Q4)", hypercube(4), true, 4},
  };
}

inline std::vector<VerdictRecord> verify_known_values(const Limits& limits = {}) {
  std::vector<VerdictRecord> out;
  for (const KnownValue& kv : known_value_table()) {
    VerdictRecord r;
    r.theorem_id = std::string(theorem::kKnownValue);
    r.graph_id = graph6_encode(kv.graph);
    r.detail = kv.label;
    r.inputs.n = kv.graph.order() / 2;
    r.inputs.e = kv.graph.edge_count();
    r.bound = std::to_string(kv.expected);
    r.bound_approx = kv.expected;
    try {
      const SpectrumReport sp = spectrum(kv.graph, limits, {.packing = false});
      r.inputs.f = sp.f_min;
      r.inputs.big_f = sp.f_max;
      r.observed = kv.minimum ? sp.f_min : sp.f_max;
      r.status = r.observed == kv.expected ? Status::kPass : Status::kFail;
      r.equality = EqualityCase::kNotApplicable;
    } catch (const ResourceError& err) {
      r.status = Status::kAborted;
      r.detail += std::string(": ") + err.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Numeric comparison of the sqrt upper bound on F against (e - n)/2 and
/// r = e - 2n + 1 beyond the stated crossover edge counts. Empty `es` means
/// every e from n to 2n^2 - n.
inline std::vector<VerdictRecord> verify_crossover_remark(std::span<const int> ns,
                                                          std::span<const int> es = {}) {
  std::vector<VerdictRecord> out;
  for (int n : ns) {
    if (n < 2) throw GraphError("crossover check needs n >= 2");
    std::vector<int> samples(es.begin(), es.end());
    if (samples.empty()) {
      for (int e = n; e <= 2 * n * n - n; ++e) samples.push_back(e);
    }
    for (int e : samples) {
      const Surd value = bounds::max_forcing_upper(n, e);
      VerdictRecord r;
      r.theorem_id = std::string(theorem::kCrossover);
      r.graph_id = "n=" + std::to_string(n) + ",e=" + std::to_string(e);
      r.inputs.n = n;
      r.inputs.e = e;
      r.bound = value.to_string();
      r.bound_approx = value.to_double();
      const bool past_half = Rational(e) > Rational(7 * n - 2, 3);
      // 2n - 1 + sqrt(2n^2 - 2n)/2 < e
      const bool past_r = Surd(Rational(2 * n - 1), Rational(1, 2), 2LL * n * n - 2LL * n).compare(e) < 0;
      bool ok = true;
      if (past_half && value.compare(Rational(e - n, 2)) >= 0) ok = false;
      if (past_r && value.compare(Rational(e - 2 * n + 1)) >= 0) ok = false;
      r.status = (past_half || past_r) ? (ok ? Status::kPass : Status::kFail) : Status::kInapplicable;
      r.observed = (past_half ? 1 : 0) + (past_r ? 2 : 0);
      r.detail = "observed bit 1: e > (7n-2)/3, bit 2: e > 2n-1+sqrt(2n^2-2n)/2";
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_VERIFIER_HPP_

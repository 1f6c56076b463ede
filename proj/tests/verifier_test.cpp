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


#include "forcing_lab/verifier.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "forcing_lab/families.hpp"
#include "oracles.hpp"

namespace forcing_lab {
namespace {

namespace th = theorem;

const VerdictRecord* find(const std::vector<VerdictRecord>& records, std::string_view id) {
  for (const auto& r : records) {
    if (r.theorem_id == id) return &r;
  }
  return nullptr;
}

std::vector<std::string> ids(const std::vector<VerdictRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) out.push_back(r.theorem_id);
  return out;
}

TEST(VerifierTest, NoPerfectMatchingGivesOneInapplicableRecord) {
  for (const Graph& g : {cycle_graph(5), empty_graph(4), complete_bipartite(1, 3)}) {
    const auto records = verify_graph(g);
    ASSERT_EQ(records.size(), 1U);
    EXPECT_EQ(records[0].theorem_id, th::kNoPerfectMatching);
    EXPECT_EQ(records[0].status, Status::kInapplicable);
    EXPECT_EQ(records[0].inputs.f, -1);
  }
}

TEST(VerifierTest, SolverLimitGivesAbortedRecord) {
  Limits limits;
  limits.node_limit = 1;
  const auto records = verify_graph(complete_graph(8), limits);
  ASSERT_EQ(records.size(), 1U);
  EXPECT_EQ(records[0].theorem_id, th::kSolver);
  EXPECT_EQ(records[0].status, Status::kAborted);
  EXPECT_FALSE(records[0].detail.empty());
}

TEST(VerifierTest, RecordOrderIsFixed) {
  const auto a = ids(verify_graph(complete_bipartite(3, 3)));
  const auto b = ids(verify_graph(complete_graph(4)));
  const auto c = ids(verify_graph(matching_graph(3)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.size(), 26U);
  EXPECT_EQ(a.front(), th::kUniqueBipartite);
  EXPECT_EQ(a.back(), th::kConjectureLargeF);
}

TEST(VerifierTest, InputsMatchOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph_with_pm(rng, 4 + 2 * (trial % 2), 0.5);
    const auto records = verify_graph(g);
    int f = g.order();
    int big_f = 0;
    int af = 0;
    for (std::uint64_t mask : oracle::perfect_matching_masks(g)) {
      const Matching m = oracle::matching_from_mask(g, mask);
      f = std::min(f, oracle::forcing_number(g, m));
      big_f = std::max(big_f, oracle::forcing_number(g, m));
      af = std::max(af, oracle::anti_forcing_number(g, m));
    }
    const GraphInputs& in = records.front().inputs;
    EXPECT_EQ(in.f, f);
    EXPECT_EQ(in.big_f, big_f);
    EXPECT_EQ(in.af, af);
    EXPECT_EQ(in.e, g.edge_count());
    EXPECT_EQ(in.split, oracle::is_split(g));
    EXPECT_EQ(in.cograph, oracle::is_p4_free(g));
  }
}

TEST(VerifierTest, ExtremalGraphsHitEqualityCases) {
  const auto h = verify_graph(make_H(4, 0));
  EXPECT_EQ(find(h, th::kUniqueBipartite)->equality, EqualityCase::kMatchesExtremal);
  EXPECT_EQ(find(h, th::kSizeBipartite)->equality, EqualityCase::kMatchesExtremal);
  const auto hat = verify_graph(make_H_hat(4));
  EXPECT_EQ(find(hat, th::kUnique)->equality, EqualityCase::kMatchesExtremal);
  EXPECT_EQ(find(hat, th::kUniqueBipartite)->status, Status::kInapplicable);
  const auto join = verify_graph(make_H_hat_join(4, 2));
  EXPECT_EQ(find(join, th::kSizeGeneral)->equality, EqualityCase::kMatchesExtremal);
  EXPECT_EQ(find(join, th::kSizeGeneralInverse)->equality, EqualityCase::kMatchesExtremal);
  const auto k33 = verify_graph(complete_bipartite(3, 3));
  EXPECT_EQ(find(k33, th::kCompleteBipartite)->equality, EqualityCase::kMatchesExtremal);
  EXPECT_EQ(find(k33, th::kMaxForcingUpper)->equality, EqualityCase::kMatchesExtremal);
  const auto c4k2 = verify_graph(disjoint_union(cycle_graph(4), matching_graph(1)));
  EXPECT_EQ(find(c4k2, th::kEdgesUpper)->equality, EqualityCase::kMatchesExtremal);
  for (const auto* set : {&h, &hat, &join, &k33, &c4k2}) {
    for (const auto& r : *set) {
      EXPECT_NE(r.status, Status::kFail) << r.theorem_id << ' ' << r.graph_id;
      EXPECT_NE(r.status, Status::kCounterexample) << r.theorem_id;
    }
  }
}

TEST(VerifierTest, NoFailuresOnAnyGraphOfOrderFourOrSix) {
  std::map<std::string, int> equality_mismatch;
  for (int order : {2, 4, 6}) {
    oracle::for_each_labeled(order, [&](const Graph& g) {
      for (const auto& r : verify_graph(g)) {
        ASSERT_NE(r.status, Status::kFail) << r.theorem_id << ' ' << r.graph_id;
        ASSERT_NE(r.status, Status::kCounterexample) << r.theorem_id << ' ' << r.graph_id;
        ASSERT_NE(r.status, Status::kAborted) << r.theorem_id << ' ' << r.graph_id;
        if (r.equality == EqualityCase::kMismatch) ++equality_mismatch[r.theorem_id];
      }
    });
  }
  // Only the two F-versus-e statements, which carry no iff, may be tight
  // on graphs other than nK2 and K_{n,n}.
  for (const auto& [id, count] : equality_mismatch) {
    EXPECT_TRUE(id == th::kMaxForcingEdges || id == th::kMaxForcingUpper) << id << ' ' << count;
  }
}

TEST(VerifierTest, MatchesHAgreesWithPermutationSearch) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Graph> targets;
    for (int k = 0; k < n; ++k) targets.push_back(make_H(n, k));
    oracle::for_each_labeled(2 * n, [&](const Graph& g) {
      for (int k = 0; k < n; ++k) {
        ASSERT_EQ(matches_H(g, n, k), oracle::isomorphic(g, targets[k])) << graph6_encode(g) << " k=" << k;
      }
    });
  }
  std::mt19937_64 rng(22);
  for (int k = 0; k < 4; ++k) {
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(matches_H(make_H(4, k).permuted(perm), 4, k));
  }
}

bool oracle_threshold(const Graph& g) {
  // No induced P4, C4 or 2K2.
  const int n = g.order();
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (std::popcount(s) != 4) continue;
    const Graph h = g.induced(s);
    std::vector<int> d;
    for (int v = 0; v < 4; ++v) d.push_back(h.degree(v));
    std::sort(d.begin(), d.end());
    if (d == std::vector<int>{1, 1, 2, 2} && is_connected(h)) return false;
    if (d == std::vector<int>{2, 2, 2, 2}) return false;
    if (d == std::vector<int>{1, 1, 1, 1}) return false;
  }
  return true;
}

TEST(VerifierTest, ThresholdRecognitionMatchesForbiddenSubgraphs) {
  for (int order = 1; order <= 6; ++order) {
    oracle::for_each_labeled(order, [](const Graph& g) {
      ASSERT_EQ(is_threshold(g), oracle_threshold(g)) << graph6_encode(g);
    });
  }
  EXPECT_TRUE(is_threshold(make_H_hat_join(4, 1)));
  EXPECT_TRUE(is_threshold(make_H_hat(5)));
}

TEST(VerifierTest, IsomorphicToAgreesWithPermutationSearch) {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < n; ++k) {
      const Graph target = make_H_hat_join(n, k);
      oracle::for_each_labeled(2 * n, [&](const Graph& g) {
        if (g.edge_count() != target.edge_count()) return;
        ASSERT_EQ(*isomorphic_to(g, target), oracle::isomorphic(g, target)) << graph6_encode(g);
      });
    }
  }
}

TEST(VerifierTest, StructuralHelpers) {
  EXPECT_TRUE(is_union_of_c4_and_k2(disjoint_union(cycle_graph(4), matching_graph(2))));
  EXPECT_TRUE(is_union_of_c4_and_k2(matching_graph(3)));
  EXPECT_FALSE(is_union_of_c4_and_k2(cycle_graph(6)));
  EXPECT_FALSE(is_union_of_c4_and_k2(complete_graph(4)));
  EXPECT_TRUE(is_disjoint_union_of_two_complete_bipartite(disjoint_union(complete_bipartite(2, 2), matching_graph(1))));
  EXPECT_FALSE(is_disjoint_union_of_two_complete_bipartite(complete_bipartite(2, 2)));
  EXPECT_FALSE(is_disjoint_union_of_two_complete_bipartite(disjoint_union(complete_bipartite(1, 2), matching_graph(1))));
}

TEST(VerifierTest, EqualityCaseVerification) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto r = verify_equality_case(th::kSizeBipartite, make_H(n, k));
      EXPECT_EQ(r.status, Status::kPass);
      EXPECT_EQ(r.equality, EqualityCase::kMatchesExtremal);
      const auto s = verify_equality_case(th::kSizeGeneral, make_H_hat_join(n, k));
      EXPECT_EQ(s.equality, EqualityCase::kMatchesExtremal);
    }
  }
  const auto wrong = verify_equality_case(th::kUnique, make_H(3, 0));
  EXPECT_EQ(wrong.status, Status::kFail);
  EXPECT_EQ(wrong.equality, EqualityCase::kMismatch);
  EXPECT_EQ(verify_equality_case(th::kConjecture, make_H(3, 0)).status, Status::kInapplicable);
  EXPECT_EQ(verify_equality_case(th::kUnique, cycle_graph(5)).status, Status::kInapplicable);
}

TEST(VerifierTest, MinimaxHoldsOnPlaneBipartiteAndFailsOnK33) {
  EXPECT_EQ(verify_minimax(make_grid(4, 4), "P4xP4").status, Status::kPass);
  EXPECT_EQ(verify_minimax(cycle_graph(8), "C8").status, Status::kPass);
  const auto k33 = verify_minimax(complete_bipartite(3, 3), "K33");
  EXPECT_EQ(k33.status, Status::kFail);
  EXPECT_EQ(k33.observed, 6);
  EXPECT_EQ(k33.witnesses.size(), 6U);
}

TEST(VerifierTest, KnownValueTableShape) {
  const auto table = known_value_table();
  EXPECT_EQ(table.size(), 17U);
  for (const auto& kv : table) {
    EXPECT_LE(kv.graph.order(), 32);
    EXPECT_EQ(kv.graph.order() % 2, 0);
  }
}

TEST(VerifierTest, CrossoverRemarkHolds) {
  const std::vector<int> ns = {2, 3, 4, 5, 6, 8};
  const auto records = verify_crossover_remark(ns);
  EXPECT_FALSE(records.empty());
  int applicable = 0;
  for (const auto& r : records) {
    EXPECT_NE(r.status, Status::kFail) << r.graph_id;
    applicable += r.status == Status::kPass;
  }
  EXPECT_GT(applicable, 0);
  EXPECT_THROW(verify_crossover_remark(std::vector<int>{1}), GraphError);
}

TEST(VerifierTest, NonbipartiteNMinusTwoFlag) {
  GraphInputs in;
  in.n = 3;
  in.f = 1;
  EXPECT_TRUE(is_nonbipartite_f_n_minus_2(in));
  in.bipartite = true;
  EXPECT_FALSE(is_nonbipartite_f_n_minus_2(in));
  in.bipartite = false;
  in.f = -1;
  EXPECT_FALSE(is_nonbipartite_f_n_minus_2(in));
}

}  // namespace
}  // namespace forcing_lab

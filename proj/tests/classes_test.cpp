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


#include "forcing_lab/classes.hpp"

#include <gtest/gtest.h>

#include <random>

#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph6.hpp"
#include "oracles.hpp"

namespace forcing_lab {
namespace {

int oracle_min_forcing(const Graph& g) {
  int best = g.order();
  for (std::uint64_t mask : oracle::perfect_matching_masks(g)) {
    best = std::min(best, oracle::forcing_number(g, oracle::matching_from_mask(g, mask)));
  }
  return best;
}

TEST(ClassesTest, SplitExamples) {
  EXPECT_TRUE(is_split(complete_graph(5)));
  EXPECT_TRUE(is_split(empty_graph(4)));
  EXPECT_TRUE(is_split(path_graph(4)));
  EXPECT_FALSE(is_split(cycle_graph(4)));
  EXPECT_FALSE(is_split(cycle_graph(5)));
  EXPECT_FALSE(is_split(matching_graph(2)));
  const auto p = split_partition(path_graph(4));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(oracle::is_clique(path_graph(4), p->clique));
  EXPECT_TRUE(oracle::is_independent(path_graph(4), p->independent));
}

TEST(ClassesTest, CographExamples) {
  EXPECT_TRUE(is_cograph(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_cograph(cycle_graph(4)));
  EXPECT_FALSE(is_cograph(path_graph(4)));
  EXPECT_FALSE(is_cograph(cycle_graph(5)));
  EXPECT_TRUE(is_cograph(make_matching_join(4, 2)));
}

TEST(ClassesTest, SplitAndCographMatchOracleExhaustively) {
  for (int order = 1; order <= 6; ++order) {
    oracle::for_each_labeled(order, [](const Graph& g) {
      const auto p = split_partition(g);
      ASSERT_EQ(p.has_value(), oracle::is_split(g)) << graph6_encode(g);
      if (p) {
        EXPECT_TRUE(oracle::is_clique(g, p->clique));
        EXPECT_TRUE(oracle::is_independent(g, p->independent));
        EXPECT_EQ(p->clique | p->independent, g.vertices());
      }
      ASSERT_EQ(is_cograph(g), oracle::is_p4_free(g)) << graph6_encode(g);
    });
  }
}

TEST(ClassesTest, SplitAndCographMatchOracleOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 7 + trial % 3, 0.2 + 0.15 * (trial % 5));
    EXPECT_EQ(is_split(g), oracle::is_split(g)) << graph6_encode(g);
    EXPECT_EQ(is_cograph(g), oracle::is_p4_free(g)) << graph6_encode(g);
  }
}

TEST(ClassesTest, F0FreenessMatchesNaiveScan) {
  for (int order = 2; order <= 7; ++order) {
    oracle::for_each_labeled(order, [](const Graph& g) {
      for (const Bipartition& b : all_bipartitions(g)) {
        ASSERT_EQ(bipartite_complement(g, b).f0_free, !has_induced_f0(g, b)) << graph6_encode(g);
      }
    });
  }
}

TEST(ClassesTest, AllBipartitionsFlipComponents) {
  EXPECT_EQ(all_bipartitions(matching_graph(3)).size(), 4U);
  EXPECT_TRUE(all_bipartitions(cycle_graph(5)).empty());
  for (const Bipartition& b : all_bipartitions(disjoint_union(path_graph(3), path_graph(2)))) {
    EXPECT_EQ(b.side_u | b.side_v, VertexSet{0b11111});
  }
}

TEST(ClassesTest, ClassifyReportsWitnesses) {
  const ClassReport g1 = classify(make_G1_member(3, {{1, 1}}));
  EXPECT_TRUE(g1.g1_member);
  EXPECT_FALSE(g1.g2_member);
  EXPECT_EQ(g1.deleted_subgraphs, (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(g1.is_f0_free, std::optional<bool>(true));
  const ClassReport g2 = classify(make_G2_member(2, 1, {{0, 5}}));
  EXPECT_TRUE(g2.g2_member);
  EXPECT_EQ(g2.g2_parts.size(), 2U);
  const ClassReport k33 = classify(complete_bipartite(3, 3));
  EXPECT_FALSE(k33.g1_member);
  EXPECT_TRUE(k33.is_elementary);
  EXPECT_TRUE(k33.is_cograph);
  const ClassReport c5 = classify(cycle_graph(5));
  EXPECT_FALSE(c5.bipartition.has_value());
  EXPECT_FALSE(c5.is_f0_free.has_value());
}

// f(G) = n - 2 for a balanced bipartite graph exactly when it is a G1 or a
// G2 member.
TEST(ClassesTest, NMinusTwoCharacterizationOnSmallBipartite) {
  for (int n = 2; n <= 3; ++n) {
    const auto pairs = [&] {
      std::vector<Edge> out;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) out.emplace_back(u, n + v);
      }
      return out;
    }();
    for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      }
      const Graph g(2 * n, edges);
      if (oracle::count_perfect_matchings(g) == 0) continue;
      const bool member = g1_witness(g).has_value() || g2_witness(g).has_value();
      EXPECT_EQ(oracle_min_forcing(g) == n - 2, member) << graph6_encode(g);
    }
  }
}

// f(G) = n - 1 recognizer against brute force on every graph of order 4
// and 6 with a perfect matching.
TEST(ClassesTest, RecognizeFNMinusOneMatchesOracle) {
  for (int order : {2, 4, 6}) {
    oracle::for_each_labeled(order, [&](const Graph& g) {
      if (oracle::count_perfect_matchings(g) == 0) return;
      ASSERT_EQ(recognize_f_n1(g), oracle_min_forcing(g) == order / 2 - 1) << graph6_encode(g);
    });
  }
}

TEST(ClassesTest, RecognizeFNMinusOneExamples) {
  EXPECT_TRUE(recognize_f_n1(complete_bipartite(4, 4)));
  EXPECT_TRUE(recognize_f_n1(complete_graph(8)));
  EXPECT_TRUE(recognize_f_n1(make_H(4, 3)));
  EXPECT_FALSE(recognize_f_n1(make_H(4, 2)));
  EXPECT_FALSE(recognize_f_n1(cycle_graph(5)));
  // K_{4,4} plus a triangle inside one side.
  EXPECT_TRUE(recognize_f_n1(complete_bipartite(4, 4).with_edges(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})));
}

}  // namespace
}  // namespace forcing_lab

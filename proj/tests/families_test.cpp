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


#include "forcing_lab/families.hpp"

#include <gtest/gtest.h>

#include "forcing_lab/classes.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph6.hpp"
#include "forcing_lab/matching.hpp"
#include "oracles.hpp"

namespace forcing_lab {
namespace {

int min_forcing(const Graph& g) { return spectrum(g, {}, {.packing = false}).f_min; }

int oracle_min_forcing(const Graph& g) {
  int best = g.order();
  for (std::uint64_t mask : oracle::perfect_matching_masks(g)) {
    best = std::min(best, oracle::forcing_number(g, oracle::matching_from_mask(g, mask)));
  }
  return best;
}

TEST(FamiliesTest, HMissesExactlyTheUpperTriangle) {
  const Graph h = make_H(3, 0);
  EXPECT_EQ(h.order(), 6);
  EXPECT_TRUE(h.adjacent(0, 3));
  EXPECT_FALSE(h.adjacent(0, 4));
  EXPECT_FALSE(h.adjacent(0, 5));
  EXPECT_FALSE(h.adjacent(1, 5));
  EXPECT_TRUE(h.adjacent(2, 3));
  EXPECT_TRUE(has_unique_perfect_matching(h));
  EXPECT_EQ(make_H(3, 2), complete_bipartite(3, 3));
}

TEST(FamiliesTest, EdgeCountFormulas) {
  for (int n = 1; n <= 16; ++n) {
    EXPECT_EQ(make_H_hat(n).edge_count(), n * n);
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(2 * make_H(n, k).edge_count(), (n - k) * (n + k + 1) + 2 * n * k) << n << ',' << k;
      EXPECT_EQ(make_H_hat_join(n, k).edge_count(), n * n + 2 * n * k - k * k - k) << n << ',' << k;
    }
  }
}

// Minimum forcing number of every extremal construction with 2n <= 12.
TEST(FamiliesTest, ExtremalMinimumForcingNumbers) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(min_forcing(make_H(n, k)), k) << "H " << n << ',' << k;
      EXPECT_EQ(min_forcing(make_H_hat_join(n, k)), k) << "HhatJoin " << n << ',' << k;
      EXPECT_EQ(min_forcing(make_matching_join(n, k)), k) << "MJoin " << n << ',' << k;
      if (k <= n - 2) {
        EXPECT_EQ(min_forcing(make_G4(n, k)), k + 1) << "G4 " << n << ',' << k;
      }
      for (int i = 1; i <= n - k - 2; ++i) {
        EXPECT_EQ(min_forcing(make_G5(n, k, i)), k + 2) << "G5 " << n << ',' << k << ',' << i;
      }
    }
  }
}

TEST(FamiliesTest, ExtremalValuesMatchOracleUpToOrderEight) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(oracle_min_forcing(make_H(n, k)), k);
      EXPECT_EQ(oracle_min_forcing(make_H_hat_join(n, k)), k);
      EXPECT_EQ(oracle_min_forcing(make_matching_join(n, k)), k);
      if (k <= n - 2) {
        EXPECT_EQ(oracle_min_forcing(make_G4(n, k)), k + 1);
      }
      for (int i = 1; i <= n - k - 2; ++i) EXPECT_EQ(oracle_min_forcing(make_G5(n, k, i)), k + 2);
    }
  }
}

TEST(FamiliesTest, HHatIsEdgeMaximalWithUniqueMatching) {
  for (int n = 1; n <= 5; ++n) {
    const Graph h = make_H_hat(n);
    EXPECT_EQ(oracle::count_perfect_matchings(h), 1);
    for (const Edge& e : h.complement().edges()) {
      EXPECT_GT(oracle::count_perfect_matchings(h.with_edges(std::vector<Edge>{e})), 1);
    }
  }
}

TEST(FamiliesTest, InvalidParametersThrow) {
  EXPECT_THROW(make_H(3, 3), GraphError);
  EXPECT_THROW(make_H(0, 0), GraphError);
  EXPECT_THROW(make_G4(3, 2), GraphError);
  EXPECT_THROW(make_G5(4, 1, 2), GraphError);
  EXPECT_THROW(make_H(17, 0), GraphError);
  EXPECT_THROW(make_G1_member(3, {{2, 2}}), GraphError);
  EXPECT_THROW(make_G1_member(3, {}), GraphError);
  EXPECT_THROW(make_G2_member(1, 1, {{0, 1}}), GraphError);
  EXPECT_THROW(make_G2_member(2, 1, {{0, 5}, {2, 3}}), GraphError);
}

TEST(FamiliesTest, G1AndG2MembersAreRecognized) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& parts : g1_deletion_lists(n)) {
      const Graph g = make_G1_member(n, parts);
      EXPECT_TRUE(g1_witness(g).has_value()) << graph6_encode(g);
    }
    for (const Graph& g : all_g2_members(n)) EXPECT_TRUE(g2_witness(g).has_value()) << graph6_encode(g);
  }
  EXPECT_EQ(g1_deletion_lists(2).size(), 2U);
  EXPECT_EQ(all_g2_members(2).size(), 3U);
}

TEST(FamiliesTest, ProductsAndStandardGraphs) {
  EXPECT_EQ(make_grid(4, 4).edge_count(), 24);
  EXPECT_EQ(make_torus(4, 4).edge_count(), 32);
  EXPECT_EQ(make_cylinder(2, 4).edge_count(), 12);
  EXPECT_TRUE(oracle::isomorphic(make_cylinder(2, 4), hypercube(3)));
  EXPECT_EQ(hypercube(4).edge_count(), 32);
}

TEST(FamilySpecTest, ParsesAndPrints) {
  for (const char* text : {"H:6,2", "Hhat:4", "HhatJoin:5,1", "MJoin:4,2", "G4:5,1", "G5:6,1,2", "G1:3;1x1,1x2",
                           "G1:3", "G2:3", "G2:2,1;0-5", "grid:4x4", "torus:4x6", "cyl:2x5", "Q:3", "Knn:3",
                           "nK2:3", "path:4", "cycle:6", "K:4", "Kab:2,3"}) {
    const FamilySpec spec = parse_family_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(parse_family_spec(to_string(spec)), spec);
    EXPECT_FALSE(build_family(spec).empty());
  }
  EXPECT_EQ(build_graph(parse_family_spec("H:6,2")), make_H(6, 2));
  EXPECT_EQ(build_graph(parse_family_spec("grid:4x4")), make_grid(4, 4));
  EXPECT_THROW(build_graph(parse_family_spec("G1:3")), GraphError);
}

TEST(FamilySpecTest, RejectsMalformed) {
  for (const char* text : {"H6,2", "X:1", "H:6", "H:6,2,1", "H:a,2", "grid:4,4", "G1:3;1x", "G2:1,2,3", "G1:3;1x1;2",
                           "G2:2,1;0+5", "Q:", "H:6,"}) {
    EXPECT_THROW(parse_family_spec(text), ParseError) << text;
  }
}

}  // namespace
}  // namespace forcing_lab

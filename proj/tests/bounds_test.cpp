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


#include "forcing_lab/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "forcing_lab/families.hpp"
#include "forcing_lab/graph6.hpp"
#include "forcing_lab/matching.hpp"
#include "forcing_lab/rational.hpp"
#include "oracles.hpp"

namespace forcing_lab {
namespace {

TEST(RationalTest, ArithmeticAndNormalization) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(SurdTest, SimplifiesRadicand) {
  const Surd s(Rational(1), Rational(1), 12);
  EXPECT_EQ(s.radicand(), 3);
  EXPECT_EQ(s.surd_coefficient(), Rational(2));
  const Surd square(Rational(1), Rational(1, 2), 16);
  EXPECT_TRUE(square.is_rational());
  EXPECT_EQ(square.rational_part(), Rational(3));
  EXPECT_EQ(Surd(Rational(0), Rational(-1), 2).to_string(), "-sqrt(2)");
  EXPECT_EQ(Surd(Rational(1, 2), Rational(-1, 2), 5).to_string(), "1/2 - 1/2*sqrt(5)");
  EXPECT_THROW(Surd(Rational(0), Rational(1), -1), std::domain_error);
}

TEST(SurdTest, CompareAgreesWithFloatingPoint) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> rad(0, 60);
  for (int trial = 0; trial < 20000; ++trial) {
    const Surd s(Rational(small(rng), den(rng)), Rational(small(rng), den(rng)), rad(rng));
    const Rational x(small(rng), den(rng));
    const double diff = s.to_double() - x.to_double();
    if (std::abs(diff) < 1e-9) continue;
    EXPECT_EQ(s.compare(x), diff > 0 ? 1 : -1) << s.to_string() << " vs " << x.to_string();
  }
  EXPECT_EQ(Surd(Rational(3), Rational(-1), 4).compare(1), 0);
}

TEST(BoundsTest, EdgeCountFormulas) {
  EXPECT_EQ(bounds::unique_pm_max_edges(4), 16);
  EXPECT_EQ(bounds::unique_pm_bipartite_max_edges(4), 10);
  EXPECT_EQ(bounds::min_forcing_max_edges(3, 1), 13);
  EXPECT_EQ(bounds::min_forcing_bipartite_max_edges(3, 1), 8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(bounds::min_forcing_max_edges(n, 0), bounds::unique_pm_max_edges(n));
    EXPECT_EQ(bounds::min_forcing_bipartite_max_edges(n, 0), bounds::unique_pm_bipartite_max_edges(n));
  }
}

// The lower bounds on f are the inverses of the edge maxima: at the
// extremal edge count they evaluate to exactly k.
TEST(BoundsTest, LowerBoundsInvertEdgeMaxima) {
  for (long long n = 1; n <= 12; ++n) {
    for (long long k = 0; k < n; ++k) {
      EXPECT_EQ(bounds::min_forcing_lower(n, bounds::min_forcing_max_edges(n, k)).compare(k), 0);
      EXPECT_EQ(bounds::min_forcing_bipartite_lower(n, bounds::min_forcing_bipartite_max_edges(n, k)).compare(k), 0);
      if (k + 1 < n) {
        EXPECT_GT(bounds::min_forcing_lower(n, bounds::min_forcing_max_edges(n, k) + 1).compare(k), 0);
      }
    }
  }
}

TEST(BoundsTest, MaxForcingUpperInvertsMinEdges) {
  for (long long n = 2; n <= 12; ++n) {
    for (long long k = 0; k < n; ++k) {
      const Rational e = bounds::max_forcing_min_edges(n, k);
      if (!e.is_integer()) continue;
      EXPECT_EQ(bounds::max_forcing_upper(n, e.num()).compare(k), 0) << n << ' ' << k;
    }
  }
}

TEST(BoundsTest, SimpleForms) {
  EXPECT_EQ(bounds::max_forcing_upper_connected(3, 7), Rational(2));
  EXPECT_EQ(bounds::max_forcing_upper_connected(3, 6), Rational(1));
  EXPECT_EQ(bounds::max_forcing_upper_edges(3, 9), Rational(3));
  EXPECT_EQ(bounds::matched_degree_sum_lower(4, 1), Rational(8, 3));
  EXPECT_EQ(bounds::conjectured_min_edges(3, 1), Rational(9, 2));
  EXPECT_EQ(bounds::conjectured_max_forcing_upper(3, 9), Rational(2));
  EXPECT_EQ(bounds::anti_forcing_upper_cyclomatic(6, 9), 4);
  EXPECT_EQ(bounds::anti_forcing_upper_edges(6, 9), Rational(3));
  EXPECT_EQ(bounds::min_forcing_degree_lower_split_cograph(4), Rational(3, 2));
}

TEST(BoundsTest, BoundValuesHypotheses) {
  const BoundValues cube = bound_values(hypercube(3));
  EXPECT_TRUE(cube.bipartite);
  EXPECT_TRUE(cube.connected);
  EXPECT_TRUE(cube.f_lower_bipartite.has_value());
  EXPECT_EQ(*cube.f_lower_degree_bipartite, 2);
  EXPECT_FALSE(cube.f_lower_degree_split_cograph.has_value());
  const BoundValues k4 = bound_values(complete_graph(4));
  EXPECT_FALSE(k4.bipartite);
  EXPECT_TRUE(k4.split);
  EXPECT_EQ(*k4.f_lower_degree_split_cograph, Rational(1));
  EXPECT_THROW(bound_values(cycle_graph(5)), GraphError);
  EXPECT_THROW(bound_values(empty_graph(4)), GraphError);
}

// Every bound holds on every graph of order 4 and 6 with a perfect
// matching, with f and F taken from the brute-force oracle.
TEST(BoundsTest, HoldOnSmallGraphsAgainstOracle) {
  for (int order : {4, 6}) {
    oracle::for_each_labeled(order, [](const Graph& g) {
      const auto pms = oracle::perfect_matching_masks(g);
      if (pms.empty()) return;
      int f = g.order();
      int big_f = 0;
      for (std::uint64_t mask : pms) {
        const int x = oracle::forcing_number(g, oracle::matching_from_mask(g, mask));
        f = std::min(f, x);
        big_f = std::max(big_f, x);
      }
      const BoundValues b = bound_values(g);
      const std::string id = graph6_encode(g);
      EXPECT_LE(b.f_lower_general.compare(f), 0) << id;
      if (b.f_lower_bipartite) {
        EXPECT_LE(b.f_lower_bipartite->compare(f), 0) << id;
      }
      if (b.f_lower_degree_bipartite) {
        EXPECT_LE(*b.f_lower_degree_bipartite, f) << id;
      }
      if (b.f_lower_degree_split_cograph) {
        EXPECT_LE(*b.f_lower_degree_split_cograph, Rational(f)) << id;
      }
      if (b.big_f_upper_connected) {
        EXPECT_LE(Rational(big_f), *b.big_f_upper_connected) << id;
      }
      EXPECT_LE(Rational(big_f), b.big_f_upper_edges) << id;
      EXPECT_GE(b.big_f_upper.compare(big_f), 0) << id;
      EXPECT_LE(Rational(big_f), b.big_f_upper_conjectured) << id;
      EXPECT_LE(static_cast<long long>(g.edge_count()), bounds::min_forcing_max_edges(b.n, f)) << id;
    });
  }
}

}  // namespace
}  // namespace forcing_lab

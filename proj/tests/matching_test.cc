// Copyright 2026 The Hedonic Mechanisms Authors.
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

#include "hedonic/matching.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "hedonic/error.h"
#include "hedonic/instances.h"

namespace hedonic {
namespace {

// Position of {a, b} when the pairs of K_n are listed lexicographically.
std::size_t listed_position(std::size_t n, AgentId a, AgentId b) {
  std::size_t pos = 0;
  for (AgentId x = 0; x < n; ++x) {
    for (AgentId y = x + 1; y < n; ++y, ++pos) {
      if (x == std::min(a, b) && y == std::max(a, b)) return pos;
    }
  }
  ADD_FAILURE() << "pair not found";
  return pos;
}

// Round-robin schedule of K_n for even n: round r pairs n-1 with r and
// (r + k) with (r - k) mod (n-1) for k = 1 .. n/2 - 1.
std::vector<std::vector<Edge>> one_factorization(std::size_t n) {
  const std::size_t m = n - 1;
  std::vector<std::vector<Edge>> rounds;
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Edge> round = {Edge(r, m)};
    for (std::size_t k = 1; k < n / 2; ++k) {
      round.emplace_back((r + k) % m, (r + m - k) % m);
    }
    rounds.push_back(round);
  }
  return rounds;
}

UndirectedWeightedGraph random_graph(Rng& rng, std::size_t n,
                                     std::int64_t max_num,
                                     std::int64_t den) {
  UndirectedWeightedGraph g(n);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (rng.bernoulli(Rational(2, 3))) {
        g.add_edge(a, b, Rational(rng.between(1, max_num), den));
      }
    }
  }
  return g;
}

TEST(EdgeIndexTest, MatchesLexicographicListing) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b = a + 1; b < n; ++b) {
        EXPECT_EQ(canonical_edge_index(n, Edge(b, a)), listed_position(n, a, b));
      }
    }
  }
}

TEST(GraphTest, RejectsBadEdges) {
  UndirectedWeightedGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1, Rational(1)), ValidationError);
  EXPECT_THROW(g.add_edge(0, 3, Rational(1)), ValidationError);
  EXPECT_THROW(g.add_edge(0, 1, Rational(0)), ValidationError);
  g.add_edge(2, 0, Rational(1, 2));
  EXPECT_EQ(g.weight(0, 2), Rational(1, 2));
  EXPECT_EQ(g.weight(1, 2), 0);
  EXPECT_THROW(Matching({Edge(0, 1), Edge(1, 2)}), ValidationError);
}

TEST(OrderTest, SmallerHighestEdgeWins) {
  // K_4 perfect matchings: {01,23} keys 2^0+2^5, {02,13} 2^1+2^4,
  // {03,12} 2^2+2^3.
  const Matching m1({Edge(0, 1), Edge(2, 3)});
  const Matching m2({Edge(0, 2), Edge(1, 3)});
  const Matching m3({Edge(0, 3), Edge(1, 2)});
  EXPECT_EQ(matching_order_key(m1, 4), 33);
  EXPECT_EQ(matching_order_key(m2, 4), 18);
  EXPECT_EQ(matching_order_key(m3, 4), 12);
  EXPECT_TRUE(matching_precedes(m3, m2, 4));
  EXPECT_TRUE(matching_precedes(m2, m1, 4));
  EXPECT_FALSE(matching_precedes(m1, m1, 4));

  UndirectedWeightedGraph k4(4);
  for (AgentId a = 0; a < 4; ++a) {
    for (AgentId b = a + 1; b < 4; ++b) k4.add_edge(a, b, Rational(1));
  }
  EXPECT_EQ(max_weight_matching(k4), m3);
  EXPECT_EQ(brute_force_max_matching(k4), m3);
}

TEST(MaxWeightMatchingTest, EmptyAndTrivialGraphs) {
  EXPECT_TRUE(max_weight_matching(UndirectedWeightedGraph(0)).empty());
  EXPECT_TRUE(max_weight_matching(UndirectedWeightedGraph(5)).empty());
  UndirectedWeightedGraph g(2);
  g.add_edge(0, 1, Rational(3, 7));
  EXPECT_EQ(max_weight_matching(g), Matching({Edge(0, 1)}));
}

TEST(MaxWeightMatchingTest, PrefersHeavyPairOverTwoLight) {
  // Path 0-1-2-3 with weights 1, 3, 1: {1,2} alone beats {0,1},{2,3}.
  UndirectedWeightedGraph g(4);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(3));
  g.add_edge(2, 3, Rational(1));
  EXPECT_EQ(max_weight_matching(g), Matching({Edge(1, 2)}));
  g.add_edge(1, 2, Rational(2));
  // Now a tie of weight 2; {01,23} has key 2^0+2^5, {12} has key 2^3.
  EXPECT_EQ(max_weight_matching(g), Matching({Edge(1, 2)}));
}

TEST(MaxWeightMatchingTest, RecoversHeavierFactorOfOneFactorization) {
  for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
    const auto rounds = one_factorization(n);
    ASSERT_EQ(rounds.size(), n - 1);
    for (std::size_t heavy = 0; heavy < rounds.size(); ++heavy) {
      UndirectedWeightedGraph g(n);
      for (std::size_t r = 0; r < rounds.size(); ++r) {
        for (const Edge& e : rounds[r]) {
          g.add_edge(e.first, e.second, Rational(r == heavy ? 2 : 1));
        }
      }
      EXPECT_EQ(g.edges().size(), n * (n - 1) / 2);
      EXPECT_EQ(max_weight_matching(g), Matching(rounds[heavy]))
          << "n=" << n << " heavy=" << heavy;
    }
  }
}

TEST(MaxWeightMatchingTest, AgreesWithBruteForce) {
  Rng rng(17);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = rng.between(1, 9);
    const auto g = t % 2 ? random_graph(rng, n, 3, 1)
                         : random_graph(rng, n, 12, 5);
    ASSERT_EQ(max_weight_matching(g), brute_force_max_matching(g)) << t;
  }
}

TEST(MaxWeightMatchingTest, LargeDenominatorsUseWideIntegers) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rng.between(4, 9);
    UndirectedWeightedGraph g(n);
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b = a + 1; b < n; ++b) {
        const BigInt den = (BigInt(1) << 70) + rng.between(1, 1000);
        g.add_edge(a, b, Rational(BigInt(rng.between(1, 1000)), den));
      }
    }
    ASSERT_EQ(max_weight_matching(g), brute_force_max_matching(g)) << t;
  }
}

TEST(EnumerationTest, CountsMatchingsOfCompleteGraphs) {
  // Telephone numbers: matchings of K_n.
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 10, 26, 76, 232};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    UndirectedWeightedGraph g(n);
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b = a + 1; b < n; ++b) g.add_edge(a, b, Rational(1));
    }
    std::set<std::vector<Edge>> seen;
    for_each_matching(g, [&](const Matching& m) { seen.insert(m.pairs()); });
    EXPECT_EQ(seen.size(), expected[n]) << "n=" << n;
  }
  EXPECT_THROW(for_each_matching(UndirectedWeightedGraph(17),
                                 [](const Matching&) {}),
               GuardExceeded);
}

TEST(IntraCoalitionTest, IgnoresEdgesLeavingTheCoalition) {
  UndirectedWeightedGraph g(5);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(2));
  g.add_edge(2, 3, Rational(1));
  g.add_edge(3, 4, Rational(2));
  EXPECT_EQ(intra_coalition_max_matching(g, {0, 1, 3}),
            Matching({Edge(0, 1)}));
  EXPECT_EQ(intra_coalition_max_matching(g, {1, 2, 3, 4}),
            Matching({Edge(1, 2), Edge(3, 4)}));
  EXPECT_TRUE(intra_coalition_max_matching(g, {0, 2, 4}).empty());
}

}  // namespace
}  // namespace hedonic

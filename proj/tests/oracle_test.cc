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

#include "hedonic/oracle.h"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hedonic/error.h"
#include "hedonic/instances.h"

namespace hedonic {
namespace {

// Bell numbers from the Bell triangle.
std::vector<std::uint64_t> bell_triangle(std::size_t count) {
  std::vector<std::uint64_t> bell = {1};
  std::vector<std::uint64_t> row = {1};
  while (bell.size() <= count) {
    std::vector<std::uint64_t> next = {row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = next;
    bell.push_back(row.front());
  }
  return bell;
}

// Best welfare over all partitions, by recursive block assignment.
Rational slow_opt(const ValuationProfile& v, GameKind kind,
                  std::vector<Coalition>& blocks, AgentId next) {
  if (next == v.agent_count()) {
    Rational total;
    for (const Coalition& c : blocks) total += coalition_welfare(v, kind, c);
    return total;
  }
  blocks.push_back({next});
  Rational best = slow_opt(v, kind, blocks, next + 1);
  blocks.pop_back();
  for (Coalition& c : blocks) {
    c.push_back(next);
    best = std::max(best, slow_opt(v, kind, blocks, next + 1));
    c.pop_back();
  }
  return best;
}

TEST(PartitionStreamTest, CountsAreBellNumbers) {
  const auto bell = bell_triangle(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_partitions(n), bell[n]) << "n=" << n;
  }
}

TEST(PartitionStreamTest, YieldsDistinctPartitionsInOrder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    PartitionStream s(n);
    EXPECT_EQ(s.partition(), Partition::grand(n));
    std::set<std::vector<Coalition>> seen;
    std::vector<std::size_t> previous;
    Partition last = s.partition();
    do {
      EXPECT_TRUE(previous.empty() || previous < s.labels());
      previous = s.labels();
      last = s.partition();
      seen.insert(last.coalitions());
      EXPECT_EQ(last.size(), s.block_count());
    } while (s.next());
    EXPECT_EQ(last, Partition::singletons(n));
    EXPECT_EQ(seen.size(), count_partitions(n));
  }
}

TEST(PartitionStreamTest, Guard) {
  EXPECT_THROW(PartitionStream(0), GuardExceeded);
  EXPECT_THROW(PartitionStream(kMaxOracleAgents + 1), GuardExceeded);
  EXPECT_THROW(
      optimal_partition(ValuationProfile(13, ValuationClass::kSimple),
                        GameKind::kAshg),
      GuardExceeded);
}

TEST(OptimalPartitionTest, AgreesWithRecursiveSearch) {
  Rng rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = rng.between(1, 6);
    const auto cls = static_cast<ValuationClass>(t % 4);
    const GameKind kind = t % 3 ? GameKind::kAshg : GameKind::kFhg;
    const Instance inst = gen_random(cls, n, Rational(1, 2), rng, kind);
    std::vector<Coalition> blocks;
    const OptResult r = optimal_partition(inst.profile, kind);
    EXPECT_EQ(r.welfare, slow_opt(inst.profile, kind, blocks, 0)) << t;
    EXPECT_EQ(social_welfare(inst.profile, kind, r.best), r.welfare);
    EXPECT_EQ(r.partitions_examined, count_partitions(n));
  }
}

TEST(OptimalPartitionTest, FirstMaximizerWins) {
  // All zero: every partition ties, the grand coalition comes first.
  const ValuationProfile zero(4, ValuationClass::kSimple);
  EXPECT_EQ(optimal_partition(zero, GameKind::kAshg).best,
            Partition::grand(4));
  EXPECT_EQ(optimal_partitions(zero, GameKind::kFhg).size(), 15u);
}

TEST(OptimalPartitionTest, KnownInstances) {
  const Instance c7 = gen_simple_cycle7(1);
  EXPECT_EQ(optimal_partition(c7.profile, c7.kind).welfare, Rational(5, 3));
  const Instance four = gen_four_cycle();
  const OptResult r = optimal_partition(four.profile, four.kind);
  EXPECT_EQ(r.welfare, 4);
  EXPECT_EQ(r.best, Partition::grand(4));
}

TEST(OptimalPartitionTest, AllMaximizersShareTheOptimum) {
  const Instance chord = gen_simple_cycle7(2);
  const auto all = optimal_partitions(chord.profile, chord.kind);
  ASSERT_FALSE(all.empty());
  const OptResult r = optimal_partition(chord.profile, chord.kind);
  EXPECT_EQ(all.front(), r.best);
  for (const Partition& p : all) {
    EXPECT_EQ(social_welfare(chord.profile, chord.kind, p), r.welfare);
  }
}

TEST(UpperBoundTest, HalfSumBoundsFractionalOptimum) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = rng.between(2, 6);
    const Instance inst = gen_random(ValuationClass::kNonNegative, n,
                                     Rational(1, 2), rng, GameKind::kFhg);
    EXPECT_LE(optimal_partition(inst.profile, inst.kind).welfare,
              optimal_welfare_upper_bound_nonneg(inst.profile));
  }
  EXPECT_THROW(optimal_welfare_upper_bound_nonneg(
                   ValuationProfile(3, ValuationClass::kGeneral)),
               ValidationError);
}

}  // namespace
}  // namespace hedonic

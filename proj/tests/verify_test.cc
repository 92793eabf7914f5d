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

#include "hedonic/verify.h"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hedonic/error.h"
#include "hedonic/instances.h"

namespace hedonic {
namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

std::size_t differing(const std::vector<Rational>& a,
                      const std::vector<Rational>& b) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] != b[k];
  return d;
}

// Pairs agents 1 and 2 exactly when agent 1 claims to be indifferent to 2.
// An agent 1 who truly likes 2 gains by lying.
Partition contrary(const ValuationProfile& d) {
  const std::size_t n = d.agent_count();
  if (n >= 2 && d.value(0, 1) == 0) {
    std::vector<Coalition> blocks = {{0, 1}};
    for (AgentId i = 2; i < n; ++i) blocks.push_back({i});
    return Partition(n, blocks);
  }
  return Partition::singletons(n);
}

TEST(DeviationValuesTest, PerModeAndClass) {
  EXPECT_EQ(deviation_values(DeviationSpace::exhaustive(ValuationClass::kDuplex)),
            rats({-1, 0, 1}));
  EXPECT_EQ(deviation_values(DeviationSpace::exhaustive(ValuationClass::kSimple)),
            rats({0, 1}));
  EXPECT_EQ(deviation_values(
                DeviationSpace::grid(ValuationClass::kGeneral, Rational(1, 2))),
            rats({-1, Rational(-9, 10), Rational(-1, 2), Rational(-1, 100), 0,
                  Rational(1, 100), Rational(1, 2), Rational(9, 10), 1}));
  EXPECT_EQ(deviation_values(DeviationSpace::grid(ValuationClass::kNonNegative,
                                                  Rational(1, 2))),
            rats({0, Rational(1, 100), Rational(1, 2), Rational(9, 10), 1}));
  EXPECT_TRUE(
      deviation_values(DeviationSpace::sampled(ValuationClass::kGeneral, 5, 1))
          .empty());
  EXPECT_THROW(
      deviation_values(DeviationSpace::exhaustive(ValuationClass::kGeneral)),
      ValidationError);
}

TEST(DeviationRowsTest, ExhaustiveDuplexRowsAreOrdered) {
  const std::vector<Rational> truth = rats({1, 0, -1});
  const auto rows = deviation_rows(
      DeviationSpace::exhaustive(ValuationClass::kDuplex), 3, 1, truth);
  ASSERT_EQ(rows.size(), 8u);
  std::set<std::vector<Rational>> distinct(rows.begin(), rows.end());
  EXPECT_EQ(distinct.size(), 8u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k][1], 0);
    EXPECT_NE(rows[k], truth);
    if (k > 0) {
      EXPECT_LE(differing(rows[k - 1], truth), differing(rows[k], truth));
    }
  }
  EXPECT_EQ(rows.front(), rats({-1, 0, -1}));
  EXPECT_EQ(rows.back(), rats({0, 0, 1}));
}

TEST(DeviationRowsTest, GridCountAndGuard) {
  const auto rows =
      deviation_rows(DeviationSpace::grid(ValuationClass::kGeneral,
                                          Rational(1, 2)),
                     3, 0, rats({0, 0, 0}));
  EXPECT_EQ(rows.size(), 80u);
  EXPECT_THROW(deviation_rows(DeviationSpace::grid(ValuationClass::kGeneral,
                                                   Rational(1, 1000)),
                              4, 0, rats({0, 0, 0, 0})),
               GuardExceeded);
  EXPECT_THROW(deviation_rows(DeviationSpace::exhaustive(ValuationClass::kGeneral),
                              3, 0, rats({0, 0, 0})),
               ValidationError);
}

TEST(DeviationRowsTest, SampledRowsAreSeededAndAdmissible) {
  const auto space = DeviationSpace::sampled(ValuationClass::kNonNegative, 25, 9);
  const auto rows = deviation_rows(space, 4, 2, rats({0, 0, 0, 0}));
  EXPECT_EQ(rows.size(), 25u);
  EXPECT_EQ(rows, deviation_rows(space, 4, 2, rats({0, 0, 0, 0})));
  for (const auto& row : rows) {
    EXPECT_EQ(row[2], 0);
    for (const Rational& x : row) {
      EXPECT_TRUE(admissible(ValuationClass::kNonNegative, x));
      EXPECT_EQ(1000 % denominator(x), 0);
    }
  }
}

TEST(StrategyproofTest, FindsTheContraryManipulation) {
  const ValuationProfile truth = ValuationProfile::from_arcs(
      3, ValuationClass::kSimple, {{0, 1, 1}});
  const SpVerdict v = check_strategyproof(
      contrary, GameKind::kAshg, truth,
      DeviationSpace::exhaustive(ValuationClass::kSimple));
  ASSERT_TRUE(v.violated());
  const SpWitness& w = *v.witness;
  EXPECT_EQ(w.agent, 0u);
  EXPECT_EQ(w.deviation, rats({0, 0, 0}));
  EXPECT_EQ(w.utility_truthful, 0);
  EXPECT_EQ(w.utility_deviating, 1);
  EXPECT_EQ(v.deviations_checked, 1u);
  EXPECT_TRUE(replay_witness(w, contrary, GameKind::kAshg));

  SpWitness tampered = w;
  tampered.deviation = truth.row(0);
  EXPECT_FALSE(replay_witness(tampered, contrary, GameKind::kAshg));
}

TEST(StrategyproofTest, ConstantMechanismsNeverViolate) {
  const Instance gap = gen_general_gap(Rational(1, 100), 1);
  for (MechanismId id :
       {MechanismId::kGrandCoalition, MechanismId::kSingletons}) {
    const SpVerdict grid = check_strategyproof(
        id, AgentOrdering::identity(3), gap.kind, gap.profile,
        DeviationSpace::grid(ValuationClass::kGeneral));
    EXPECT_EQ(grid.status, SpStatus::kNoViolationFound);
    // 21 multiples of 1/10 plus +-1/100.
    EXPECT_EQ(grid.deviations_checked, 3u * (23u * 23u - 1u));
    const SpVerdict sampled = check_strategyproof(
        id, AgentOrdering::identity(3), gap.kind, gap.profile,
        DeviationSpace::sampled(ValuationClass::kGeneral, 50, 4));
    EXPECT_EQ(sampled.status, SpStatus::kNoViolationFound);
  }
}

TEST(StrategyproofTest, SpaceClassMustMatchTruth) {
  const Instance four = gen_four_cycle();
  EXPECT_THROW(check_strategyproof(
                   MechanismId::kDuplexPairing, AgentOrdering::identity(4),
                   four.kind, four.profile,
                   DeviationSpace::exhaustive(ValuationClass::kSimple)),
               ValidationError);
}

TEST(ProfileSweepTest, CountsAndEarlyStop) {
  std::uint64_t count = 0;
  for_each_profile(ValuationClass::kSimple, 2, [&](const ValuationProfile&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 4u);
  std::set<std::vector<Rational>> seen;
  for_each_profile(ValuationClass::kDuplex, 2,
                   [&](const ValuationProfile& d) {
                     seen.insert({d.value(0, 1), d.value(1, 0)});
                     return true;
                   });
  EXPECT_EQ(seen.size(), 9u);
  count = 0;
  for_each_profile(ValuationClass::kDuplex, 3, [&](const ValuationProfile&) {
    return ++count < 10;
  });
  EXPECT_EQ(count, 10u);
  EXPECT_THROW(for_each_profile(ValuationClass::kSimple, 6,
                                [](const ValuationProfile&) { return true; }),
               GuardExceeded);
}

TEST(ProfileSweepTest, SingletonsHoldEverywhere) {
  const SpSweepResult r = sweep_strategyproof(
      bind_mechanism(MechanismId::kSingletons, AgentOrdering::identity(3)),
      GameKind::kFhg, ValuationClass::kDuplex, 3);
  EXPECT_EQ(r.profiles_checked, 729u);
  EXPECT_EQ(r.deviations_checked, 729u * 3u * 8u);
  EXPECT_EQ(r.verdict.status, SpStatus::kHolds);
}

TEST(ProfileSweepTest, ContraryFailsFast) {
  const SpSweepResult r = sweep_strategyproof(contrary, GameKind::kAshg,
                                              ValuationClass::kSimple, 2);
  EXPECT_TRUE(r.verdict.violated());
  EXPECT_LT(r.profiles_checked, 4u);
}

TEST(RatioTest, Kinds) {
  EXPECT_EQ(Ratio::of(0, 0).kind(), Ratio::Kind::kUndefined);
  EXPECT_EQ(Ratio::of(1, 0).kind(), Ratio::Kind::kInfinite);
  EXPECT_EQ(Ratio::of(Rational(5, 3), Rational(3, 2)).value(),
            Rational(10, 9));
  EXPECT_EQ(to_string(Ratio::of(1, 0)), "inf");
  EXPECT_EQ(to_string(Ratio::of(0, 1)), "undef");
  EXPECT_EQ(to_string(Ratio::of(6, 1)), "6/1");
  EXPECT_TRUE(Ratio::of(0, 0) < Ratio::of(1, 2));
  EXPECT_TRUE(Ratio::of(2, 1) < Ratio::of(3, 1));
  EXPECT_TRUE(Ratio::of(100, 1) < Ratio::of(1, 0));
}

TEST(RatioTest, SevenCycleMatching) {
  const RatioReport r =
      approx_ratio(MechanismId::kMatching, gen_simple_cycle7(1));
  EXPECT_EQ(r.opt_welfare, Rational(5, 3));
  EXPECT_EQ(r.mechanism_welfare, Rational(3, 2));
  EXPECT_EQ(to_string(r.ratio), "10/9");
  EXPECT_EQ(r.agents, 7u);
}

TEST(RatioTest, SweepsAreDeterministicAndBounded) {
  RandomInstanceSpec spec;
  const RatioSweep a = ratio_sweep(MechanismId::kMatching, spec, 60, 5);
  const RatioSweep b = ratio_sweep(MechanismId::kMatching, spec, 60, 5);
  ASSERT_EQ(a.reports.size(), 60u);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  EXPECT_FALSE(Ratio::of(2, 1) < a.max_ratio);

  spec.cls = ValuationClass::kDuplex;
  spec.kind = GameKind::kAshg;
  spec.min_agents = 3;
  const RatioSweep d = ratio_sweep(MechanismId::kDuplexPairing, spec, 60, 5);
  for (const RatioReport& r : d.reports) {
    const std::size_t n = r.agents;
    EXPECT_FALSE(Ratio::of(n * (n - 1), 1) < r.ratio) << r.label;
  }
}

TEST(AcceptabilityTest, GrandCoalitionOnMixedSigns) {
  const std::vector<Instance> instances = {
      gen_simple_cycle7(1), gen_general_gap(Rational(1, 100), 1)};
  const auto bad = check_acceptable(MechanismId::kGrandCoalition, instances);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->index, 1u);
  EXPECT_EQ(bad->welfare, Rational(-9, 100));
  EXPECT_FALSE(check_acceptable(MechanismId::kSingletons, instances));
}

}  // namespace
}  // namespace hedonic

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

// Empirical checks of strategyproofness, acceptability and approximation
// ratios for any mechanism.

#ifndef HEDONIC_VERIFY_H_
#define HEDONIC_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hedonic/game.h"
#include "hedonic/instances.h"
#include "hedonic/mechanisms.h"
#include "hedonic/rational.h"

namespace hedonic {

// Any deterministic mechanism, with its ordering (if any) already bound.
using MechanismFn = std::function<Partition(const ValuationProfile&)>;

MechanismFn bind_mechanism(MechanismId id, const AgentOrdering& ord);

enum class DeviationMode { kExhaustive, kGrid, kSampled };

// The rows a single agent may declare instead of her true row. Exhaustive
// applies to the finite classes (duplex, simple); Grid and Sampled to the
// continuous ones (general, non-negative).
struct DeviationSpace {
  ValuationClass cls = ValuationClass::kSimple;
  DeviationMode mode = DeviationMode::kExhaustive;
  // Grid: multiples of `grid_step` across the class range, plus
  // {-1, 0, 1} and +-{1/100, 9/10} where admissible.
  Rational grid_step{1, 10};
  // Sampled: `samples` rows per agent of uniform multiples of 1/1000.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static DeviationSpace exhaustive(ValuationClass cls);
  static DeviationSpace grid(ValuationClass cls,
                             Rational step = Rational(1, 10));
  static DeviationSpace sampled(ValuationClass cls, std::uint64_t samples,
                                std::uint64_t seed);
};

inline constexpr std::size_t kMaxDeviationRowsPerAgent = 1'000'000;

// Admissible values a single entry ranges over in `space` (ascending).
// Empty for Sampled.
std::vector<Rational> deviation_values(const DeviationSpace& space);

// Every row agent i may declare, the true row excluded, diagonal fixed at 0.
// Exhaustive and Grid rows are ordered by the number of entries that differ
// from `truth_row`, then lexicographically (agent index ascending, values
// ascending); Sampled rows come in draw order. Throws GuardExceeded above
// kMaxDeviationRowsPerAgent, ValidationError for a mode/class mismatch.
std::vector<std::vector<Rational>> deviation_rows(
    const DeviationSpace& space, std::size_t n, AgentId i,
    const std::vector<Rational>& truth_row);

struct SpWitness {
  AgentId agent;
  ValuationProfile truth;
  std::vector<Rational> deviation;
  std::size_t deviation_index;
  Partition truthful_outcome;
  Partition deviating_outcome;
  // Both measured with the agent's true valuations.
  Rational utility_truthful;
  Rational utility_deviating;
};

enum class SpStatus {
  // Every deviation in an exhaustive space was tried.
  kHolds,
  // Grid or Sampled search found nothing; the search was not complete.
  kNoViolationFound,
  kViolated,
};

struct SpVerdict {
  SpStatus status = SpStatus::kHolds;
  std::optional<SpWitness> witness;
  std::uint64_t deviations_checked = 0;

  bool violated() const { return status == SpStatus::kViolated; }
};

std::string to_string(SpStatus status);

// Tries every (agent, deviation) pair in agent order, then deviation order,
// and stops at the first strict improvement of the deviating agent's true
// utility. Throws ValidationError when the space class differs from the
// truth class.
SpVerdict check_strategyproof(const MechanismFn& mechanism, GameKind kind,
                              const ValuationProfile& truth,
                              const DeviationSpace& space);
SpVerdict check_strategyproof(MechanismId id, const AgentOrdering& ord,
                              GameKind kind, const ValuationProfile& truth,
                              const DeviationSpace& space);

// Re-runs the mechanism on both declarations and confirms the improvement
// with exact arithmetic.
bool replay_witness(const SpWitness& witness, const MechanismFn& mechanism,
                    GameKind kind);

// Calls fn on every profile of a finite class (duplex: 3^(n(n-1)),
// simple: 2^(n(n-1))) in base-|values| counting order over the off-diagonal
// entries in row-major order. Stops early when fn returns false.
// Throws GuardExceeded above 2^24 profiles.
void for_each_profile(ValuationClass cls, std::size_t n,
                      const std::function<bool(const ValuationProfile&)>& fn);

struct SpSweepResult {
  std::uint64_t profiles_checked = 0;
  std::uint64_t deviations_checked = 0;
  // Violated verdict of the first failing profile, else kHolds.
  SpVerdict verdict;
};

// check_strategyproof with an exhaustive space over every truthful profile
// of a finite class.
SpSweepResult sweep_strategyproof(const MechanismFn& mechanism, GameKind kind,
                                  ValuationClass cls, std::size_t n);

struct AcceptabilityCounterexample {
  std::size_t index;
  std::string label;
  Partition outcome;
  Rational welfare;
};

// nullopt when every instance yields welfare >= 0.
std::optional<AcceptabilityCounterexample> check_acceptable(
    const MechanismFn& mechanism, const std::vector<Instance>& instances);
std::optional<AcceptabilityCounterexample> check_acceptable(
    MechanismId id, const std::vector<Instance>& instances);

// OPT / SW(M) for one instance. Infinite when OPT > 0 = SW(M); Undefined
// when OPT = 0.
class Ratio {
 public:
  enum class Kind { kFinite, kInfinite, kUndefined };

  static Ratio of(const Rational& opt, const Rational& mechanism);

  Kind kind() const { return kind_; }
  // Only meaningful for kFinite.
  const Rational& value() const { return value_; }

  // Finite ratios by value, Infinite above all of them. Undefined compares
  // below everything and is never selected as a maximum.
  friend bool operator<(const Ratio& a, const Ratio& b);
  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  Kind kind_ = Kind::kUndefined;
  Rational value_;
};

// "p/q", "inf" or "undef".
std::string to_string(const Ratio& r);

struct RatioReport {
  std::string label;
  std::size_t agents = 0;
  Partition outcome;
  Rational mechanism_welfare;
  Rational opt_welfare;
  Ratio ratio;
};

RatioReport approx_ratio(const MechanismFn& mechanism,
                         const Instance& instance);
// Uses the identity ordering when `ord` is nullopt.
RatioReport approx_ratio(MechanismId id, const Instance& instance,
                         const std::optional<AgentOrdering>& ord = {});

// Random instances with n drawn uniformly in [min_agents, max_agents].
struct RandomInstanceSpec {
  ValuationClass cls = ValuationClass::kSimple;
  GameKind kind = GameKind::kFhg;
  std::size_t min_agents = 2;
  std::size_t max_agents = 7;
  Rational density{1, 2};
};

struct RatioSweep {
  std::vector<RatioReport> reports;
  // Maximum over the non-Undefined ratios; Undefined if there is none.
  Ratio max_ratio;
  std::size_t undefined_count = 0;
};

// Identity ordering on every instance. Deterministic given the seed.
RatioSweep ratio_sweep(MechanismId id, const RandomInstanceSpec& spec,
                       std::size_t trials, std::uint64_t seed);

// The instances ratio_sweep draws, for reuse by other checks.
std::vector<Instance> random_instances(const RandomInstanceSpec& spec,
                                       std::size_t trials, std::uint64_t seed);

}  // namespace hedonic

#endif  // HEDONIC_VERIFY_H_

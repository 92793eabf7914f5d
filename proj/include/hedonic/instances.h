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

// Instance generators for the lower-bound constructions and the tightness
// families, seeded random instances, and the line-oriented instance file
// format:
//
//   hedonic 1
//   agents <n>
//   class <general|nonneg|duplex|simple>
//   game <ashg|fhg>
//   # label: <free text>          (optional)
//   v <i> <j> <p>/<q>             (1-based agents, nonzero entries only)
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#ifndef HEDONIC_INSTANCES_H_
#define HEDONIC_INSTANCES_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "hedonic/game.h"
#include "hedonic/rational.h"

namespace hedonic {

struct Instance {
  std::string label;
  ValuationProfile profile;
  GameKind kind;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Three agents, general class. Variant 1: v_1(2) = eps, v_2(3) = -1,
// v_3(2) = 9/10. Variant 2 replaces v_2(3) by -eps. Requires 0 < eps < 1/10.
Instance gen_general_gap(const Rational& eps, int variant);

// Directed n-cycle 1 -> 2 -> ... -> n -> 1 with weight alpha on arcs leaving
// odd agents and beta on arcs leaving even agents. Requires n even, n >= 4
// and 0 < beta < alpha < 1/n. FHG.
Instance gen_nonneg_cycle(std::size_t n, const Rational& alpha,
                          const Rational& beta);

// Duplex star, n >= 4, ASHG. Agents 1..n-2 value n-1 at +1; agent n values
// 1..n-2 at -1. Variant 1: agent n-1 values n at +1 and everyone else at -1.
// Variant 2: agent n-1 values n at +1 and everyone else at 0.
Instance gen_duplex_star(std::size_t n, int variant);

// Simple directed 7-cycle, FHG; variant 2 adds the chord 2 -> 4.
Instance gen_simple_cycle7(int variant);

// Duplex 4-cycle 1 -> 2 -> 3 -> 4 -> 1 with unit weights, ASHG.
Instance gen_four_cycle();

// Complete simple digraph: every ordered pair valued 1. FHG.
Instance gen_complete_reciprocal(std::size_t n);

// Deterministic for a fixed seed on every platform: draws come straight from
// std::mt19937_64 (whose output sequence is fixed by the standard) with
// rejection sampling, never through std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // True with probability exactly p = a/b, p in [0, 1]. Throws
  // ValidationError if b does not fit in 64 bits.
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

// Each off-diagonal entry is nonzero with probability `density`, drawn
// uniformly from the class's nonzero admissible values (multiples of 1/100
// for the continuous classes).
Instance gen_random(ValuationClass cls, std::size_t n, const Rational& density,
                    std::uint64_t seed, GameKind kind = GameKind::kAshg);
Instance gen_random(ValuationClass cls, std::size_t n, const Rational& density,
                    Rng& rng, GameKind kind = GameKind::kAshg);

std::string serialize_instance(const Instance& instance);

// Throws ValidationError ("line <k>: ...") on malformed headers, bad agent
// ids, duplicate entries, nonzero diagonal entries or class violations.
Instance parse_instance(std::string_view text);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& instance);

}  // namespace hedonic

#endif  // HEDONIC_INSTANCES_H_

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

// Hedonic-game instances: valuation profiles, partitions, and the utility and
// social-welfare functions of additively separable (ASHG) and fractional
// (FHG) hedonic games.

#ifndef HEDONIC_GAME_H_
#define HEDONIC_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hedonic/rational.h"

namespace hedonic {

// 0-based agent index. File formats and CLI output are 1-based.
using AgentId = std::size_t;

enum class ValuationClass { kGeneral, kNonNegative, kDuplex, kSimple };

enum class GameKind { kAshg, kFhg };

std::string_view to_string(ValuationClass c);
std::string_view to_string(GameKind k);
// Inverse of to_string; also accepts the short file-format tags
// ("general", "nonneg", "duplex", "simple", "ashg", "fhg").
std::optional<ValuationClass> parse_valuation_class(std::string_view text);
std::optional<GameKind> parse_game_kind(std::string_view text);

// Whether `value` is admissible for class `c` (ignoring the diagonal rule).
bool admissible(ValuationClass c, const Rational& value);

// Whether every value admissible for `inner` is admissible for `outer`.
bool class_embeds(ValuationClass inner, ValuationClass outer);

struct Arc {
  AgentId from;
  AgentId to;
  Rational weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// One entry that breaks the class range or the zero-diagonal rule.
struct Violation {
  AgentId i;
  AgentId j;
  Rational value;
  std::string reason;
};

// n x n matrix of declared (or true) valuations v_i(j), tagged with its
// class. Entries default to zero. The profile may hold out-of-class values;
// validate() reports them and every consumer that needs a valid profile
// calls ensure_valid().
class ValuationProfile {
 public:
  ValuationProfile(std::size_t n, ValuationClass cls);

  static ValuationProfile from_arcs(std::size_t n, ValuationClass cls,
                                    const std::vector<Arc>& arcs);

  std::size_t agent_count() const { return n_; }
  ValuationClass valuation_class() const { return cls_; }

  const Rational& value(AgentId i, AgentId j) const {
    return entries_[i * n_ + j];
  }

  // Copy with agent i's whole row replaced. `row` has n entries, diagonal
  // included.
  ValuationProfile with_row(AgentId i, const std::vector<Rational>& row) const;
  // Copy with a single entry replaced.
  ValuationProfile with_value(AgentId i, AgentId j, Rational value) const;
  // Same entries under another class tag (used to embed simple into duplex).
  ValuationProfile with_class(ValuationClass cls) const;

  std::vector<Rational> row(AgentId i) const;

  // Nonzero entries in row-major order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const ValuationProfile&,
                         const ValuationProfile&) = default;

 private:
  std::size_t n_;
  ValuationClass cls_;
  std::vector<Rational> entries_;
};

std::vector<Violation> validate(const ValuationProfile& v);

// Throws ValidationError listing the first few violations.
void ensure_valid(const ValuationProfile& v);

using Coalition = std::vector<AgentId>;

// A set partition of {0, ..., n-1} in canonical form: members ascend within
// each coalition and coalitions are ordered by their smallest member, so two
// partitions are equal iff their coalition lists are equal.
class Partition {
 public:
  // Canonicalizes; throws ValidationError when the coalitions are empty,
  // overlap, or do not cover [0, n).
  Partition(std::size_t n, std::vector<Coalition> coalitions);

  static Partition grand(std::size_t n);
  static Partition singletons(std::size_t n);
  // labels[i] is the block id of agent i; ids need not be contiguous.
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t agent_count() const { return n_; }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  std::size_t size() const { return coalitions_.size(); }

  // Index into coalitions() of agent i's coalition.
  std::size_t block_of(AgentId i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_;
  std::vector<Coalition> coalitions_;
  std::vector<std::size_t> block_;
};

// 1-based rendering, e.g. "{1,2} {3}".
std::string to_string(const Partition& p);

const Coalition& coalition_of(const Partition& p, AgentId i);

Rational utility(const ValuationProfile& v, GameKind kind, const Partition& p,
                 AgentId i);

// Sum over ordered pairs (i, j) inside the coalition of v_i(j).
Rational internal_sum(const ValuationProfile& v, const Coalition& c);

// Welfare contributed by one coalition: internal_sum for ASHG, divided by
// |c| for FHG.
Rational coalition_welfare(const ValuationProfile& v, GameKind kind,
                           const Coalition& c);

Rational social_welfare(const ValuationProfile& v, GameKind kind,
                        const Partition& p);

}  // namespace hedonic

#endif  // HEDONIC_GAME_H_

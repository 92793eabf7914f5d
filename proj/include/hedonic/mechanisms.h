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

// Deterministic coalition-formation mechanisms: declared profile in,
// partition out.

#ifndef HEDONIC_MECHANISMS_H_
#define HEDONIC_MECHANISMS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "hedonic/game.h"
#include "hedonic/matching.h"

namespace hedonic {

enum class MechanismId {
  // Everyone together. Optimal for non-negative ASHG.
  kGrandCoalition,
  // Everyone alone. Trivially strategyproof and acceptable.
  kSingletons,
  // Single-pair mechanism for duplex declarations.
  kDuplexPairing,
  // Order-minimal maximum-weight matching on the symmetrized graph, for
  // simple declarations.
  kMatching,
};

// CLI names: "grand", "singletons", "duplex-pairing", "matching".
std::string_view to_string(MechanismId id);
std::optional<MechanismId> parse_mechanism_id(std::string_view text);

// Whether the mechanism is defined on profiles of class `c`.
bool accepts_class(MechanismId id, ValuationClass c);

// A permutation of the agents; position 0 is considered first.
class AgentOrdering {
 public:
  // Throws ValidationError unless `order` is a permutation of [0, n).
  explicit AgentOrdering(std::vector<AgentId> order);

  static AgentOrdering identity(std::size_t n);

  // "identity", or a comma-separated 1-based permutation such as "4,1,2,3".
  static AgentOrdering parse(std::string_view text, std::size_t n);

  std::size_t size() const { return order_.size(); }
  const std::vector<AgentId>& order() const { return order_; }
  // Position of agent i in the ordering.
  std::size_t rank(AgentId i) const { return rank_[i]; }

 private:
  std::vector<AgentId> order_;
  std::vector<std::size_t> rank_;
};

// Validates `d`, checks class compatibility, and dispatches. Orderings only
// affect kDuplexPairing; a size mismatch is still rejected.
Partition run_mechanism(MechanismId id, const ValuationProfile& d,
                        const AgentOrdering& ord);

// No j with d_i(j) = 1 and d_j(i) != -1. Requires a duplex or simple
// profile.
bool is_sink(const ValuationProfile& d, AgentId i);

// Walks the agents in `ord`. For the current agent i it looks for a partner
// j, trying in turn (a) d_i(j) = 1 and d_j(i) = 1, (b) d_i(j) = 1,
// d_j(i) = 0 and j is a sink, (c) d_i(j) = 1, d_j(i) = 0 and j precedes i in
// `ord`; within each case j is scanned by ascending index. The first hit is
// returned as the only pair, everyone else alone. No hit at all: singletons.
Partition duplex_pairing(const ValuationProfile& d, const AgentOrdering& ord);

// Weight 1 for a one-way arc, 2 for a reciprocated pair. Requires a simple
// profile.
UndirectedWeightedGraph build_gbar(const ValuationProfile& d);

// Pairs from max_weight_matching(build_gbar(d)); unmatched agents alone.
Partition matching_mechanism(const ValuationProfile& d);

// Coalitions induced by a matching over n agents.
Partition partition_from_matching(const Matching& m, std::size_t n);

}  // namespace hedonic

#endif  // HEDONIC_MECHANISMS_H_

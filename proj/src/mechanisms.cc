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

#include "hedonic/mechanisms.h"

#include <string>
#include <utility>

#include "hedonic/error.h"

namespace hedonic {
namespace {

void require_finite_class(const ValuationProfile& d, bool simple_only,
                          std::string_view who) {
  const ValuationClass c = d.valuation_class();
  const bool ok = simple_only ? c == ValuationClass::kSimple
                              : (c == ValuationClass::kSimple ||
                                 c == ValuationClass::kDuplex);
  if (!ok) {
    throw ValidationError(std::string(who) + " requires a " +
                          (simple_only ? "simple" : "duplex or simple") +
                          " profile, got " + std::string(to_string(c)));
  }
}

Partition pair_with_singletons(std::size_t n, AgentId i, AgentId j) {
  std::vector<Coalition> cs;
  cs.push_back({i, j});
  for (AgentId k = 0; k < n; ++k) {
    if (k != i && k != j) cs.push_back({k});
  }
  return Partition(n, std::move(cs));
}

}  // namespace

std::string_view to_string(MechanismId id) {
  switch (id) {
    case MechanismId::kGrandCoalition:
      return "grand";
    case MechanismId::kSingletons:
      return "singletons";
    case MechanismId::kDuplexPairing:
      return "duplex-pairing";
    case MechanismId::kMatching:
      return "matching";
  }
  return "?";
}

std::optional<MechanismId> parse_mechanism_id(std::string_view text) {
  for (MechanismId id :
       {MechanismId::kGrandCoalition, MechanismId::kSingletons,
        MechanismId::kDuplexPairing, MechanismId::kMatching}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

bool accepts_class(MechanismId id, ValuationClass c) {
  switch (id) {
    case MechanismId::kGrandCoalition:
    case MechanismId::kSingletons:
      return true;
    case MechanismId::kDuplexPairing:
      return c == ValuationClass::kDuplex || c == ValuationClass::kSimple;
    case MechanismId::kMatching:
      return c == ValuationClass::kSimple;
  }
  return false;
}

AgentOrdering::AgentOrdering(std::vector<AgentId> order)
    : order_(std::move(order)), rank_(order_.size(), order_.size()) {
  const std::size_t n = order_.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    const AgentId i = order_[pos];
    if (i >= n || rank_[i] != n) {
      throw ValidationError("ordering is not a permutation of the agents");
    }
    rank_[i] = pos;
  }
}

AgentOrdering AgentOrdering::identity(std::size_t n) {
  std::vector<AgentId> order(n);
  for (AgentId i = 0; i < n; ++i) order[i] = i;
  return AgentOrdering(std::move(order));
}

AgentOrdering AgentOrdering::parse(std::string_view text, std::size_t n) {
  if (text == "identity") return identity(n);
  std::vector<AgentId> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(start, comma - start));
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size() || value == 0) {
      throw ValidationError("bad ordering entry '" + token +
                            "' (expected 1-based agent ids)");
    }
    order.push_back(value - 1);
    start = comma + 1;
  }
  if (order.size() != n) {
    throw ValidationError("ordering lists " + std::to_string(order.size()) +
                          " agents, instance has " + std::to_string(n));
  }
  return AgentOrdering(std::move(order));
}

Partition run_mechanism(MechanismId id, const ValuationProfile& d,
                        const AgentOrdering& ord) {
  ensure_valid(d);
  if (!accepts_class(id, d.valuation_class())) {
    throw ValidationError("mechanism " + std::string(to_string(id)) +
                          " does not accept " +
                          std::string(to_string(d.valuation_class())) +
                          " profiles");
  }
  if (ord.size() != d.agent_count()) {
    throw ValidationError("ordering size differs from the agent count");
  }
  switch (id) {
    case MechanismId::kGrandCoalition:
      return Partition::grand(d.agent_count());
    case MechanismId::kSingletons:
      return Partition::singletons(d.agent_count());
    case MechanismId::kDuplexPairing:
      return duplex_pairing(d, ord);
    case MechanismId::kMatching:
      return matching_mechanism(d);
  }
  throw ValidationError("unknown mechanism");
}

bool is_sink(const ValuationProfile& d, AgentId i) {
  require_finite_class(d, false, "is_sink");
  for (AgentId j = 0; j < d.agent_count(); ++j) {
    if (d.value(i, j) == 1 && d.value(j, i) != -1) return false;
  }
  return true;
}

Partition duplex_pairing(const ValuationProfile& d, const AgentOrdering& ord) {
  require_finite_class(d, false, "duplex_pairing");
  const std::size_t n = d.agent_count();
  if (ord.size() != n) {
    throw ValidationError("ordering size differs from the agent count");
  }
  std::vector<bool> sink(n);
  for (AgentId j = 0; j < n; ++j) sink[j] = is_sink(d, j);

  for (AgentId i : ord.order()) {
    // (a) mutual friends.
    for (AgentId j = 0; j < n; ++j) {
      if (d.value(i, j) == 1 && d.value(j, i) == 1) {
        return pair_with_singletons(n, i, j);
      }
    }
    // (b) neutral sink.
    for (AgentId j = 0; j < n; ++j) {
      if (d.value(i, j) == 1 && d.value(j, i) == 0 && sink[j]) {
        return pair_with_singletons(n, i, j);
      }
    }
    // (c) neutral and already considered.
    for (AgentId j = 0; j < n; ++j) {
      if (d.value(i, j) == 1 && d.value(j, i) == 0 &&
          ord.rank(j) < ord.rank(i)) {
        return pair_with_singletons(n, i, j);
      }
    }
  }
  return Partition::singletons(n);
}

UndirectedWeightedGraph build_gbar(const ValuationProfile& d) {
  require_finite_class(d, true, "build_gbar");
  const std::size_t n = d.agent_count();
  UndirectedWeightedGraph g(n);
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) {
      const int arcs = (d.value(i, j) == 1) + (d.value(j, i) == 1);
      if (arcs > 0) g.add_edge(i, j, arcs);
    }
  }
  return g;
}

Partition partition_from_matching(const Matching& m, std::size_t n) {
  std::vector<bool> matched(n, false);
  std::vector<Coalition> cs;
  for (const Edge& e : m.pairs()) {
    if (e.second >= n) throw ValidationError("matching exceeds agent count");
    cs.push_back({e.first, e.second});
    matched[e.first] = matched[e.second] = true;
  }
  for (AgentId i = 0; i < n; ++i) {
    if (!matched[i]) cs.push_back({i});
  }
  return Partition(n, std::move(cs));
}

Partition matching_mechanism(const ValuationProfile& d) {
  return partition_from_matching(max_weight_matching(build_gbar(d)),
                                 d.agent_count());
}

}  // namespace hedonic

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

#include <algorithm>
#include <string>

#include "hedonic/error.h"

namespace hedonic {
namespace {

void check_guard(std::size_t n) {
  if (n < 1 || n > kMaxOracleAgents) {
    throw GuardExceeded("partition enumeration supports 1 <= n <= " +
                        std::to_string(kMaxOracleAgents) + ", got n = " +
                        std::to_string(n));
  }
}

}  // namespace

PartitionStream::PartitionStream(std::size_t n)
    : labels_((check_guard(n), n), 0), prefix_max_(n, 0) {}

bool PartitionStream::next() {
  const std::size_t n = labels_.size();
  // Rightmost position that can still grow: labels_[i] <= max(prefix) + 1.
  for (std::size_t i = n; i-- > 1;) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t k = i + 1; k < n; ++k) {
        labels_[k] = 0;
        prefix_max_[k] = prefix_max_[i];
      }
      blocks_ = prefix_max_[n - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t count_partitions(std::size_t n) {
  PartitionStream stream(n);
  std::uint64_t count = 1;
  while (stream.next()) ++count;
  return count;
}

namespace {

// Welfare of every coalition, indexed by member bitmask.
std::vector<Rational> coalition_table(const ValuationProfile& v,
                                      GameKind kind) {
  const std::size_t n = v.agent_count();
  std::vector<Rational> value(std::size_t{1} << n);
  Coalition members;
  for (std::size_t mask = 1; mask < value.size(); ++mask) {
    members.clear();
    for (AgentId i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    value[mask] = coalition_welfare(v, kind, members);
  }
  return value;
}

// Calls visit(stream, welfare) for every partition.
template <typename Visit>
void scan_partitions(const ValuationProfile& v, GameKind kind, Visit visit) {
  const std::size_t n = v.agent_count();
  check_guard(n);
  const std::vector<Rational> value = coalition_table(v, kind);
  PartitionStream stream(n);
  std::vector<std::size_t> masks(n);
  Rational total;
  do {
    const std::vector<std::size_t>& labels = stream.labels();
    std::fill(masks.begin(), masks.begin() + stream.block_count(), 0);
    for (AgentId i = 0; i < n; ++i) masks[labels[i]] |= std::size_t{1} << i;
    total = 0;
    for (std::size_t b = 0; b < stream.block_count(); ++b) {
      total += value[masks[b]];
    }
    visit(stream, total);
  } while (stream.next());
}

}  // namespace

OptResult optimal_partition(const ValuationProfile& v, GameKind kind) {
  std::vector<std::size_t> best_labels;
  Rational best;
  std::uint64_t examined = 0;
  scan_partitions(v, kind,
                  [&](const PartitionStream& s, const Rational& welfare) {
                    if (examined == 0 || welfare > best) {
                      best = welfare;
                      best_labels = s.labels();
                    }
                    ++examined;
                  });
  return OptResult{Partition::from_labels(best_labels), best, examined};
}

std::vector<Partition> optimal_partitions(const ValuationProfile& v,
                                          GameKind kind) {
  std::vector<std::vector<std::size_t>> best_labels;
  Rational best;
  scan_partitions(v, kind,
                  [&](const PartitionStream& s, const Rational& welfare) {
                    if (best_labels.empty() || welfare > best) {
                      best = welfare;
                      best_labels.clear();
                    }
                    if (welfare == best) best_labels.push_back(s.labels());
                  });
  std::vector<Partition> out;
  out.reserve(best_labels.size());
  for (const auto& labels : best_labels) {
    out.push_back(Partition::from_labels(labels));
  }
  return out;
}

Rational optimal_welfare_upper_bound_nonneg(const ValuationProfile& v) {
  if (v.valuation_class() != ValuationClass::kNonNegative &&
      v.valuation_class() != ValuationClass::kSimple) {
    throw ValidationError(
        "the half-sum bound needs a non-negative or simple profile");
  }
  Rational total;
  for (AgentId i = 0; i < v.agent_count(); ++i) {
    for (AgentId j = 0; j < v.agent_count(); ++j) total += v.value(i, j);
  }
  return total / 2;
}

}  // namespace hedonic

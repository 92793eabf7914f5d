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

// Brute-force optimal social welfare over all set partitions.

#ifndef HEDONIC_ORACLE_H_
#define HEDONIC_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hedonic/game.h"
#include "hedonic/rational.h"

namespace hedonic {

inline constexpr std::size_t kMaxOracleAgents = 12;

// Streams every set partition of [0, n) exactly once as a restricted-growth
// string (labels[0] = 0, labels[i] <= 1 + max(labels[0..i))), in
// lexicographic order: the grand coalition first, singletons last.
//
//   PartitionStream s(4);
//   do { use(s.partition()); } while (s.next());
class PartitionStream {
 public:
  // Throws GuardExceeded unless 1 <= n <= kMaxOracleAgents.
  explicit PartitionStream(std::size_t n);

  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t block_count() const { return blocks_; }
  Partition partition() const { return Partition::from_labels(labels_); }

  // Advances; false once the last partition has been passed.
  bool next();

 private:
  std::vector<std::size_t> labels_;
  // prefix_max_[i] = max(labels_[0..i]).
  std::vector<std::size_t> prefix_max_;
  std::size_t blocks_ = 1;
};

// Number of partitions the stream yields for n (a Bell number), computed by
// counting. Throws GuardExceeded outside the guard.
std::uint64_t count_partitions(std::size_t n);

struct OptResult {
  Partition best;
  Rational welfare;
  std::uint64_t partitions_examined = 0;
};

// Maximizes social welfare over all partitions; the first maximizer in
// stream order wins ties. Throws GuardExceeded beyond kMaxOracleAgents.
OptResult optimal_partition(const ValuationProfile& v, GameKind kind);

// Every maximizer, in stream order. Same guard as optimal_partition.
std::vector<Partition> optimal_partitions(const ValuationProfile& v,
                                          GameKind kind);

// Half the total sum of all valuations: an upper bound on the optimal FHG
// welfare for non-negative profiles, since a coalition with positive
// welfare has at least two members. Throws ValidationError for classes
// that admit negative values.
Rational optimal_welfare_upper_bound_nonneg(const ValuationProfile& v);

}  // namespace hedonic

#endif  // HEDONIC_ORACLE_H_

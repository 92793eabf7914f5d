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

// Exact maximum-weight matching on general undirected graphs, with ties
// among maximum-weight matchings broken by a fixed total order on matchings
// of the complete graph K_n.
//
// The order: enumerate the pairs {i, j}, i < j, of K_n lexicographically,
// giving each a canonical index in [0, n(n-1)/2). A matching's key is
// sum over its edges of 2^index; smaller keys precede. The order depends on
// n alone, never on weights.

#ifndef HEDONIC_MATCHING_H_
#define HEDONIC_MATCHING_H_

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hedonic/game.h"
#include "hedonic/rational.h"

namespace hedonic {

// Unordered vertex pair stored with first < second.
struct Edge {
  AgentId first;
  AgentId second;

  Edge(AgentId a, AgentId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class UndirectedWeightedGraph {
 public:
  explicit UndirectedWeightedGraph(std::size_t n) : n_(n) {}

  // Throws ValidationError on self-loops, out-of-range endpoints or a
  // non-positive weight. Re-adding an edge overwrites its weight.
  void add_edge(AgentId a, AgentId b, Rational weight);

  std::size_t vertex_count() const { return n_; }
  const std::map<Edge, Rational>& edges() const { return edges_; }

  // Zero when {a, b} is not an edge.
  Rational weight(AgentId a, AgentId b) const;

  // Subgraph on the same vertex set keeping only edges inside `vertices`.
  UndirectedWeightedGraph induced(const std::vector<AgentId>& vertices) const;

 private:
  std::size_t n_;
  std::map<Edge, Rational> edges_;
};

// Canonical index of {a, b} among the pairs of K_n.
std::size_t canonical_edge_index(std::size_t n, Edge e);

class Matching {
 public:
  Matching() = default;
  // Throws ValidationError if two pairs share a vertex.
  explicit Matching(std::vector<Edge> pairs);

  // Sorted ascending.
  const std::vector<Edge>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> pairs_;
};

Rational matching_weight(const UndirectedWeightedGraph& g, const Matching& m);

// Key of m under the fixed order on matchings of K_n.
BigInt matching_order_key(const Matching& m, std::size_t n);

// True iff a strictly precedes b in the fixed order on matchings of K_n.
bool matching_precedes(const Matching& a, const Matching& b, std::size_t n);

// The order-minimal matching among those of maximum total weight. Runs a
// primal-dual blossom algorithm on integer-scaled weights adjusted so that
// the unique optimum is the order-minimal maximum-weight matching.
Matching max_weight_matching(const UndirectedWeightedGraph& g);

// Same contract as max_weight_matching, by exhaustive enumeration.
// Throws GuardExceeded when the graph has more than 16 vertices.
Matching brute_force_max_matching(const UndirectedWeightedGraph& g);

inline constexpr std::size_t kBruteForceMatchingMaxVertices = 16;

// Calls fn once for every matching of g, the empty one included. Throws
// GuardExceeded beyond kBruteForceMatchingMaxVertices.
void for_each_matching(const UndirectedWeightedGraph& g,
                       const std::function<void(const Matching&)>& fn);

// Maximum-weight matching of the subgraph induced by `coalition`, with the
// same tie-break (keys still taken over K_n of the whole graph).
Matching intra_coalition_max_matching(const UndirectedWeightedGraph& g,
                                      const Coalition& coalition);

}  // namespace hedonic

#endif  // HEDONIC_MATCHING_H_

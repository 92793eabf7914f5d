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

#include "hedonic/matching.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hedonic/error.h"

namespace hedonic {
namespace {

// Maximum-weight (not maximum-cardinality) matching on a general graph by
// Edmonds' primal-dual blossom method, O(n^3). Follows the classic
// formulation with doubled dual variables, so integer weights keep every
// intermediate value integral.
//
// Vertices are 0..n-1, blossoms n..2n-1. Edge k has endpoints 2k and 2k+1;
// endpoint p belongs to vertex endpoint_[p], and p ^ 1 is the other end.
// Labels: 0 free, 1 S (outer), 2 T (inner); bit 4 marks blossoms visited by
// scan_blossom.
template <typename Weight>
class BlossomMatcher {
 public:
  struct InputEdge {
    int u;
    int v;
    Weight w;
  };

  BlossomMatcher(int n, std::vector<InputEdge> edges)
      : n_(n), edges_(std::move(edges)) {}

  // mate[v] is v's partner or -1.
  std::vector<int> solve() {
    const int n = n_;
    const int m = static_cast<int>(edges_.size());
    if (m == 0) return std::vector<int>(n, -1);

    Weight max_weight = 0;
    for (const InputEdge& e : edges_) max_weight = std::max(max_weight, e.w);

    endpoint_.resize(2 * m);
    for (int p = 0; p < 2 * m; ++p) {
      endpoint_[p] = (p % 2 == 0) ? edges_[p / 2].u : edges_[p / 2].v;
    }
    neighbend_.assign(n, {});
    for (int k = 0; k < m; ++k) {
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, std::nullopt);
    unusedblossoms_.clear();
    for (int b = n; b < 2 * n; ++b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n, Weight(0));
    for (int v = 0; v < n; ++v) dualvar_[v] = max_weight;
    allowedge_.assign(m, false);
    queue_.clear();

    for (int stage = 0; stage < n; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n; b < 2 * n; ++b) blossombestedges_[b].reset();
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();

      for (int v = 0; v < n; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
          assign_label(v, 1, -1);
        }
      }

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            Weight kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                bestedge_[b] = k;
              }
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                bestedge_[w] = k;
              }
            }
          }
        }
        if (augmented) break;

        // No augmenting path under the current duals: pick the largest
        // dual step that keeps every constraint satisfied.
        int deltatype = 1;
        Weight delta = dualvar_[0];
        for (int v = 1; v < n; ++v) delta = std::min(delta, dualvar_[v]);
        int deltaedge = -1;
        int deltablossom = -1;

        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            Weight d = slack(bestedge_[v]);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 &&
              bestedge_[b] != -1) {
            Weight d = slack(bestedge_[b]) / 2;
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && dualvar_[b] < delta) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }

        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = edges_[deltaedge].u;
          int j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      for (int b = n; b < 2 * n; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> result(n, -1);
    for (int v = 0; v < n; ++v) {
      if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
    }
    return result;
  }

 private:
  Weight slack(int k) const {
    const InputEdge& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * e.w;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) blossom_leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    blossom_leaves(b, out);
    return out;
  }

  // Labels the top-level blossom containing w with t, reached via
  // endpoint p; a T label propagates an S label to the base's mate.
  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      blossom_leaves(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Traces back from v and w towards the roots; returns the base of a new
  // blossom, or -1 when the paths reach different roots (augmenting path).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int>& path = blossomchilds_[b];
    std::vector<int>& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(2 * n_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!blossombestedges_[child]) {
        for (int leaf : leaves(child)) {
          std::vector<int> list;
          for (int p : neighbend_[leaf]) list.push_back(p / 2);
          nblists.push_back(std::move(list));
        }
      } else {
        nblists.push_back(*blossombestedges_[child]);
      }
      for (const std::vector<int>& nblist : nblists) {
        for (int e : nblist) {
          int i = edges_[e].u;
          int j = edges_[e].v;
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj]))) {
            bestedgeto[bj] = e;
          }
        }
      }
      blossombestedges_[child].reset();
      bestedge_[child] = -1;
    }
    std::vector<int> best;
    for (int e : bestedgeto) {
      if (e != -1) best.push_back(e);
    }
    bestedge_[b] = -1;
    for (int e : best) {
      if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) {
        bestedge_[b] = e;
      }
    }
    blossombestedges_[b] = std::move(best);
  }

  void expand_blossom(int b, bool endstage) {
    // Copy: recursive expansion recycles blossom slots.
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[leaf] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      const std::vector<int>& ch = blossomchilds_[b];
      const std::vector<int>& eps = blossomendps_[b];
      const int len = static_cast<int>(ch.size());
      auto at = [len](const std::vector<int>& xs, int idx) {
        return xs[((idx % len) + len) % len];
      };
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(
          std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(eps, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[at(eps, j - endptrick) / 2] = true;
        j += jstep;
        p = at(eps, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = at(ch, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(ch, j) != entrychild) {
        bv = at(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int labelled = -1;
        for (int leaf : leaves(bv)) {
          if (label_[leaf] != 0) {
            labelled = leaf;
            break;
          }
        }
        if (labelled != -1) {
          label_[labelled] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(labelled, 2, labelend_[labelled]);
        }
        j += jstep;
      }
    }

    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].reset();
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  // Swaps matched/unmatched edges inside blossom b along the even path from
  // vertex v to the base, making v the new base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);

    std::vector<int>& ch = blossomchilds_[b];
    std::vector<int>& eps = blossomendps_[b];
    const int len = static_cast<int>(ch.size());
    auto at = [len](const std::vector<int>& xs, int idx) {
      return xs[((idx % len) + len) % len];
    };
    const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) -
                                   ch.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(ch, j);
      int p = at(eps, j - endptrick) ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = at(ch, j);
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(eps.begin(), eps.begin() + i, eps.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void augment_matching(int k) {
    const int v = edges_[k].u;
    const int w = edges_[k].v;
    for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int n_;
  std::vector<InputEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::optional<std::vector<int>>> blossombestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<Weight> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

template <typename Weight>
Matching run_blossom(std::size_t n,
                     const std::vector<std::pair<Edge, BigInt>>& adjusted) {
  std::vector<typename BlossomMatcher<Weight>::InputEdge> edges;
  edges.reserve(adjusted.size());
  for (const auto& [e, w] : adjusted) {
    Weight weight;
    if constexpr (std::is_same_v<Weight, BigInt>) {
      weight = w;
    } else {
      weight = w.template convert_to<Weight>();
    }
    edges.push_back({static_cast<int>(e.first), static_cast<int>(e.second),
                     weight});
  }
  std::vector<int> mate =
      BlossomMatcher<Weight>(static_cast<int>(n), std::move(edges)).solve();
  std::vector<Edge> pairs;
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] > static_cast<int>(v)) pairs.emplace_back(v, mate[v]);
  }
  return Matching(std::move(pairs));
}

std::size_t bit_length(const BigInt& x) {
  return x == 0 ? 0 : boost::multiprecision::msb(x) + 1;
}

}  // namespace

Edge::Edge(AgentId a, AgentId b) : first(std::min(a, b)), second(std::max(a, b)) {}

void UndirectedWeightedGraph::add_edge(AgentId a, AgentId b, Rational weight) {
  if (a == b) throw ValidationError("self-loop on vertex " + std::to_string(a));
  if (a >= n_ || b >= n_) throw ValidationError("edge endpoint out of range");
  if (weight <= 0) throw ValidationError("edge weights must be positive");
  edges_[Edge(a, b)] = std::move(weight);
}

Rational UndirectedWeightedGraph::weight(AgentId a, AgentId b) const {
  if (a == b) return 0;
  auto it = edges_.find(Edge(a, b));
  return it == edges_.end() ? Rational(0) : it->second;
}

UndirectedWeightedGraph UndirectedWeightedGraph::induced(
    const std::vector<AgentId>& vertices) const {
  std::vector<bool> keep(n_, false);
  for (AgentId v : vertices) {
    if (v >= n_) throw ValidationError("vertex out of range");
    keep[v] = true;
  }
  UndirectedWeightedGraph out(n_);
  for (const auto& [e, w] : edges_) {
    if (keep[e.first] && keep[e.second]) out.edges_.emplace(e, w);
  }
  return out;
}

std::size_t canonical_edge_index(std::size_t n, Edge e) {
  // Pairs (i, *) for i < e.first come first: sum_{i < a} (n - 1 - i).
  const std::size_t a = e.first;
  return a * (2 * n - a - 1) / 2 + (e.second - a - 1);
}

Matching::Matching(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<AgentId> seen;
  for (const Edge& e : pairs_) {
    seen.push_back(e.first);
    seen.push_back(e.second);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ValidationError("matching pairs share a vertex");
  }
}

Rational matching_weight(const UndirectedWeightedGraph& g, const Matching& m) {
  Rational total;
  for (const Edge& e : m.pairs()) total += g.weight(e.first, e.second);
  return total;
}

BigInt matching_order_key(const Matching& m, std::size_t n) {
  BigInt key = 0;
  for (const Edge& e : m.pairs()) {
    if (e.second >= n) throw ValidationError("matching exceeds vertex count");
    bit_set(key, canonical_edge_index(n, e));
  }
  return key;
}

bool matching_precedes(const Matching& a, const Matching& b, std::size_t n) {
  return matching_order_key(a, n) < matching_order_key(b, n);
}

Matching max_weight_matching(const UndirectedWeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edges().empty()) return Matching();

  // Scale to integers, then w'(e) = W(e) * 2^(E+1) - 2^idx(e) with
  // E = n(n-1)/2. Keys lie in [0, 2^E), so one unit of W outweighs any key
  // difference and the unique w'-optimum is the order-minimal W-optimum.
  BigInt lcm_den = 1;
  for (const auto& [e, w] : g.edges()) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(w));
  }
  const std::size_t pair_count = n * (n - 1) / 2;
  BigInt scale = 0;
  bit_set(scale, pair_count + 1);
  std::vector<std::pair<Edge, BigInt>> adjusted;
  std::size_t max_bits = 0;
  for (const auto& [e, w] : g.edges()) {
    BigInt integral = numerator(w) * (lcm_den / denominator(w));
    BigInt tiebreak = 0;
    bit_set(tiebreak, canonical_edge_index(n, e));
    BigInt value = integral * scale - tiebreak;
    max_bits = std::max(max_bits, bit_length(value));
    adjusted.emplace_back(e, std::move(value));
  }
  // Duals and slacks stay within a few multiples of the largest weight.
  if (max_bits + 4 < 63) return run_blossom<std::int64_t>(n, adjusted);
  return run_blossom<BigInt>(n, adjusted);
}

void for_each_matching(const UndirectedWeightedGraph& g,
                       const std::function<void(const Matching&)>& fn) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMatchingMaxVertices) {
    throw GuardExceeded("matching enumeration supports at most " +
                        std::to_string(kBruteForceMatchingMaxVertices) +
                        " vertices, got " + std::to_string(n));
  }
  std::vector<std::vector<AgentId>> higher(n);
  for (const auto& [e, w] : g.edges()) higher[e.first].push_back(e.second);

  std::vector<bool> used(n, false);
  std::vector<Edge> current;
  // Each matching is produced once: the lowest free vertex is either left
  // unmatched or matched to one of its higher free neighbours.
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::size_t v = from;
    while (v < n && used[v]) ++v;
    if (v >= n) {
      fn(Matching(current));
      return;
    }
    used[v] = true;
    extend(v + 1);
    for (AgentId u : higher[v]) {
      if (used[u]) continue;
      used[u] = true;
      current.emplace_back(v, u);
      extend(v + 1);
      current.pop_back();
      used[u] = false;
    }
    used[v] = false;
  };
  extend(0);
}

Matching brute_force_max_matching(const UndirectedWeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  Matching best;
  Rational best_weight = 0;
  BigInt best_key = 0;
  for_each_matching(g, [&](const Matching& m) {
    Rational w = matching_weight(g, m);
    if (w < best_weight) return;
    BigInt key = matching_order_key(m, n);
    if (w > best_weight || key < best_key) {
      best = m;
      best_weight = std::move(w);
      best_key = std::move(key);
    }
  });
  return best;
}

Matching intra_coalition_max_matching(const UndirectedWeightedGraph& g,
                                      const Coalition& coalition) {
  return max_weight_matching(g.induced(coalition));
}

}  // namespace hedonic

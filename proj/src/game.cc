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

#include "hedonic/game.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hedonic/error.h"

namespace hedonic {

std::string_view to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::kGeneral:
      return "general";
    case ValuationClass::kNonNegative:
      return "nonneg";
    case ValuationClass::kDuplex:
      return "duplex";
    case ValuationClass::kSimple:
      return "simple";
  }
  return "?";
}

std::string_view to_string(GameKind k) {
  return k == GameKind::kAshg ? "ashg" : "fhg";
}

std::optional<ValuationClass> parse_valuation_class(std::string_view text) {
  if (text == "general") return ValuationClass::kGeneral;
  if (text == "nonneg" || text == "nonnegative" || text == "non-negative") {
    return ValuationClass::kNonNegative;
  }
  if (text == "duplex") return ValuationClass::kDuplex;
  if (text == "simple") return ValuationClass::kSimple;
  return std::nullopt;
}

std::optional<GameKind> parse_game_kind(std::string_view text) {
  if (text == "ashg") return GameKind::kAshg;
  if (text == "fhg") return GameKind::kFhg;
  return std::nullopt;
}

bool admissible(ValuationClass c, const Rational& value) {
  switch (c) {
    case ValuationClass::kGeneral:
      return value >= -1 && value <= 1;
    case ValuationClass::kNonNegative:
      return value >= 0 && value <= 1;
    case ValuationClass::kDuplex:
      return value == -1 || value == 0 || value == 1;
    case ValuationClass::kSimple:
      return value == 0 || value == 1;
  }
  return false;
}

bool class_embeds(ValuationClass inner, ValuationClass outer) {
  if (inner == outer || outer == ValuationClass::kGeneral) return true;
  // simple ⊂ duplex, simple ⊂ non-negative.
  return inner == ValuationClass::kSimple &&
         (outer == ValuationClass::kDuplex ||
          outer == ValuationClass::kNonNegative);
}

ValuationProfile::ValuationProfile(std::size_t n, ValuationClass cls)
    : n_(n), cls_(cls), entries_(n * n) {
  if (n == 0) throw ValidationError("a profile needs at least one agent");
}

ValuationProfile ValuationProfile::from_arcs(std::size_t n,
                                             ValuationClass cls,
                                             const std::vector<Arc>& arcs) {
  ValuationProfile v(n, cls);
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw ValidationError("arc endpoint out of range");
    }
    v.entries_[a.from * n + a.to] = a.weight;
  }
  return v;
}

ValuationProfile ValuationProfile::with_row(
    AgentId i, const std::vector<Rational>& row) const {
  if (i >= n_ || row.size() != n_) {
    throw ValidationError("row replacement does not fit the profile");
  }
  ValuationProfile out = *this;
  std::copy(row.begin(), row.end(), out.entries_.begin() + i * n_);
  return out;
}

ValuationProfile ValuationProfile::with_value(AgentId i, AgentId j,
                                              Rational value) const {
  if (i >= n_ || j >= n_) throw ValidationError("agent index out of range");
  ValuationProfile out = *this;
  out.entries_[i * n_ + j] = std::move(value);
  return out;
}

ValuationProfile ValuationProfile::with_class(ValuationClass cls) const {
  ValuationProfile out = *this;
  out.cls_ = cls;
  return out;
}

std::vector<Rational> ValuationProfile::row(AgentId i) const {
  return {entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_};
}

std::vector<Arc> ValuationProfile::arcs() const {
  std::vector<Arc> out;
  for (AgentId i = 0; i < n_; ++i) {
    for (AgentId j = 0; j < n_; ++j) {
      if (value(i, j) != 0) out.push_back({i, j, value(i, j)});
    }
  }
  return out;
}

std::vector<Violation> validate(const ValuationProfile& v) {
  std::vector<Violation> out;
  const std::size_t n = v.agent_count();
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      const Rational& x = v.value(i, j);
      if (i == j && x != 0) {
        out.push_back({i, j, x, "diagonal entry must be 0"});
      } else if (!admissible(v.valuation_class(), x)) {
        out.push_back({i, j, x,
                       "outside the admissible set of class " +
                           std::string(to_string(v.valuation_class()))});
      }
    }
  }
  return out;
}

void ensure_valid(const ValuationProfile& v) {
  std::vector<Violation> violations = validate(v);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << violations.size() << " invalid entr"
      << (violations.size() == 1 ? "y" : "ies");
  for (std::size_t k = 0; k < violations.size() && k < 3; ++k) {
    const Violation& x = violations[k];
    msg << "; v_" << x.i + 1 << "(" << x.j + 1 << ") = " << to_string(x.value)
        << ": " << x.reason;
  }
  throw ValidationError(msg.str());
}

Partition::Partition(std::size_t n, std::vector<Coalition> coalitions)
    : n_(n), coalitions_(std::move(coalitions)), block_(n, n) {
  if (n == 0) throw ValidationError("a partition needs at least one agent");
  for (Coalition& c : coalitions_) {
    if (c.empty()) throw ValidationError("empty coalition");
    std::sort(c.begin(), c.end());
  }
  std::sort(coalitions_.begin(), coalitions_.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.front() < b.front();
            });
  for (std::size_t k = 0; k < coalitions_.size(); ++k) {
    for (AgentId i : coalitions_[k]) {
      if (i >= n) throw ValidationError("coalition member out of range");
      if (block_[i] != n) {
        throw ValidationError("agent in two coalitions");
      }
      block_[i] = k;
    }
  }
  for (AgentId i = 0; i < n; ++i) {
    if (block_[i] == n) throw ValidationError("agent in no coalition");
  }
}

Partition Partition::grand(std::size_t n) {
  Coalition all(n);
  for (AgentId i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {std::move(all)});
}

Partition Partition::singletons(std::size_t n) {
  std::vector<Coalition> cs;
  cs.reserve(n);
  for (AgentId i = 0; i < n; ++i) cs.push_back({i});
  return Partition(n, std::move(cs));
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::vector<std::pair<std::size_t, Coalition>> by_label;
  for (AgentId i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(by_label.begin(), by_label.end(),
                           [&](const auto& e) { return e.first == labels[i]; });
    if (it == by_label.end()) {
      by_label.push_back({labels[i], {i}});
    } else {
      it->second.push_back(i);
    }
  }
  std::vector<Coalition> cs;
  cs.reserve(by_label.size());
  for (auto& e : by_label) cs.push_back(std::move(e.second));
  return Partition(labels.size(), std::move(cs));
}

std::size_t Partition::block_of(AgentId i) const {
  if (i >= n_) throw ValidationError("agent index out of range");
  return block_[i];
}

std::string to_string(const Partition& p) {
  std::string out;
  for (const Coalition& c : p.coalitions()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += '}';
  }
  return out;
}

const Coalition& coalition_of(const Partition& p, AgentId i) {
  return p.coalitions()[p.block_of(i)];
}

Rational utility(const ValuationProfile& v, GameKind kind, const Partition& p,
                 AgentId i) {
  if (v.agent_count() != p.agent_count()) {
    throw ValidationError("profile and partition disagree on n");
  }
  const Coalition& c = coalition_of(p, i);
  Rational sum;
  for (AgentId j : c) sum += v.value(i, j);
  if (kind == GameKind::kFhg) sum /= c.size();
  return sum;
}

Rational internal_sum(const ValuationProfile& v, const Coalition& c) {
  Rational sum;
  for (AgentId i : c) {
    for (AgentId j : c) sum += v.value(i, j);
  }
  return sum;
}

Rational coalition_welfare(const ValuationProfile& v, GameKind kind,
                           const Coalition& c) {
  Rational sum = internal_sum(v, c);
  if (kind == GameKind::kFhg) sum /= c.size();
  return sum;
}

Rational social_welfare(const ValuationProfile& v, GameKind kind,
                        const Partition& p) {
  Rational total;
  for (AgentId i = 0; i < v.agent_count(); ++i) total += utility(v, kind, p, i);
  return total;
}

}  // namespace hedonic

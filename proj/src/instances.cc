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

#include "hedonic/instances.h"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "hedonic/error.h"

namespace hedonic {
namespace {

void require_variant(int variant) {
  if (variant != 1 && variant != 2) {
    throw ValidationError("variant must be 1 or 2, got " +
                          std::to_string(variant));
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_count(const std::string& token, std::size_t line,
                        const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || token.front() == '-' ||
      token.front() == '+') {
    fail_at(line, std::string("bad ") + what + " '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Instance gen_general_gap(const Rational& eps, int variant) {
  require_variant(variant);
  if (!(eps > 0 && eps < Rational(1, 10))) {
    throw ValidationError("eps must satisfy 0 < eps < 1/10, got " +
                          to_string(eps));
  }
  const Rational two_to_three = variant == 1 ? Rational(-1) : Rational(-eps);
  return Instance{
      "general-gap eps=" + to_string(eps) + " variant=" +
          std::to_string(variant),
      ValuationProfile::from_arcs(
          3, ValuationClass::kGeneral,
          {{0, 1, eps}, {1, 2, two_to_three}, {2, 1, Rational(9, 10)}}),
      GameKind::kAshg};
}

Instance gen_nonneg_cycle(std::size_t n, const Rational& alpha,
                          const Rational& beta) {
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("nonneg-cycle needs an even n >= 4, got " +
                          std::to_string(n));
  }
  if (!(beta > 0 && beta < alpha && alpha < Rational(1, n))) {
    throw ValidationError("nonneg-cycle needs 0 < beta < alpha < 1/n, got "
                          "alpha=" + to_string(alpha) +
                          " beta=" + to_string(beta));
  }
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < n; ++i) {
    // 0-based even index = 1-based odd agent.
    arcs.push_back({i, (i + 1) % n, i % 2 == 0 ? alpha : beta});
  }
  return Instance{"nonneg-cycle n=" + std::to_string(n) +
                      " alpha=" + to_string(alpha) +
                      " beta=" + to_string(beta),
                  ValuationProfile::from_arcs(n, ValuationClass::kNonNegative,
                                              arcs),
                  GameKind::kFhg};
}

Instance gen_duplex_star(std::size_t n, int variant) {
  require_variant(variant);
  if (n < 4) {
    throw ValidationError("duplex-star needs n >= 4, got " +
                          std::to_string(n));
  }
  const AgentId hub = n - 2;   // agent n-1
  const AgentId tail = n - 1;  // agent n
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < hub; ++i) arcs.push_back({i, hub, Rational(1)});
  for (AgentId j = 0; j < hub; ++j) {
    if (variant == 1) arcs.push_back({hub, j, Rational(-1)});
  }
  arcs.push_back({hub, tail, Rational(1)});
  for (AgentId j = 0; j < hub; ++j) arcs.push_back({tail, j, Rational(-1)});
  return Instance{"duplex-star n=" + std::to_string(n) +
                      " variant=" + std::to_string(variant),
                  ValuationProfile::from_arcs(n, ValuationClass::kDuplex,
                                              arcs),
                  GameKind::kAshg};
}

Instance gen_simple_cycle7(int variant) {
  require_variant(variant);
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < 7; ++i) arcs.push_back({i, (i + 1) % 7, Rational(1)});
  if (variant == 2) arcs.push_back({1, 3, Rational(1)});
  return Instance{"simple-cycle7 variant=" + std::to_string(variant),
                  ValuationProfile::from_arcs(7, ValuationClass::kSimple, arcs),
                  GameKind::kFhg};
}

Instance gen_four_cycle() {
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < 4; ++i) arcs.push_back({i, (i + 1) % 4, Rational(1)});
  return Instance{"four-cycle",
                  ValuationProfile::from_arcs(4, ValuationClass::kDuplex, arcs),
                  GameKind::kAshg};
}

Instance gen_complete_reciprocal(std::size_t n) {
  if (n < 2) throw ValidationError("complete digraph needs n >= 2");
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i != j) arcs.push_back({i, j, Rational(1)});
    }
  }
  return Instance{"complete-reciprocal n=" + std::to_string(n),
                  ValuationProfile::from_arcs(n, ValuationClass::kSimple, arcs),
                  GameKind::kFhg};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("empty sampling range");
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw ValidationError("probability outside [0, 1]");
  const BigInt& den = denominator(p);
  if (den > std::numeric_limits<std::uint64_t>::max()) {
    throw ValidationError("probability denominator exceeds 64 bits");
  }
  const auto q = den.convert_to<std::uint64_t>();
  return below(q) < numerator(p).convert_to<std::uint64_t>();
}

Instance gen_random(ValuationClass cls, std::size_t n, const Rational& density,
                    std::uint64_t seed, GameKind kind) {
  Rng rng(seed);
  Instance out = gen_random(cls, n, density, rng, kind);
  out.label += " seed=" + std::to_string(seed);
  return out;
}

Instance gen_random(ValuationClass cls, std::size_t n, const Rational& density,
                    Rng& rng, GameKind kind) {
  if (n < 1) throw ValidationError("random instance needs n >= 1");
  if (density < 0 || density > 1) {
    throw ValidationError("density must lie in [0, 1]");
  }
  std::vector<Arc> arcs;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j || !rng.bernoulli(density)) continue;
      Rational value;
      switch (cls) {
        case ValuationClass::kSimple:
          value = 1;
          break;
        case ValuationClass::kDuplex:
          value = rng.below(2) == 0 ? -1 : 1;
          break;
        case ValuationClass::kNonNegative:
          value = Rational(rng.between(1, 100), 100);
          break;
        case ValuationClass::kGeneral: {
          std::int64_t k = rng.between(-100, 99);
          if (k >= 0) ++k;
          value = Rational(k, 100);
          break;
        }
      }
      arcs.push_back({i, j, value});
    }
  }
  return Instance{"random class=" + std::string(to_string(cls)) +
                      " n=" + std::to_string(n) +
                      " density=" + to_string(density),
                  ValuationProfile::from_arcs(n, cls, arcs), kind};
}

std::string serialize_instance(const Instance& instance) {
  const ValuationProfile& v = instance.profile;
  std::ostringstream out;
  out << "hedonic 1\n"
      << "agents " << v.agent_count() << "\n"
      << "class " << to_string(v.valuation_class()) << "\n"
      << "game " << to_string(instance.kind) << "\n";
  if (!instance.label.empty()) {
    std::string label = instance.label;
    for (char& c : label) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    out << "# label: " << label << "\n";
  }
  for (const Arc& a : v.arcs()) {
    out << "v " << a.from + 1 << " " << a.to + 1 << " " << to_string(a.weight)
        << "\n";
  }
  return out.str();
}

Instance parse_instance(std::string_view text) {
  static constexpr std::string_view kLabelPrefix = "# label:";
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int header_seen = 0;  // hedonic, agents, class, game
  std::size_t n = 0;
  ValuationClass cls = ValuationClass::kGeneral;
  GameKind kind = GameKind::kAshg;
  std::string label;
  bool have_label = false;
  std::vector<Arc> arcs;
  std::set<std::pair<AgentId, AgentId>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (!have_label && line.rfind(kLabelPrefix, 0) == 0) {
      label = trim(std::string_view(line).substr(kLabelPrefix.size()));
      have_label = true;
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    const std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;

    const std::string& key = words[0];
    if (header_seen < 4) {
      static constexpr const char* kExpected[] = {"hedonic", "agents", "class",
                                                  "game"};
      if (key != kExpected[header_seen] || words.size() != 2) {
        fail_at(line_no, std::string("expected '") + kExpected[header_seen] +
                             " <value>' header line");
      }
      switch (header_seen) {
        case 0:
          if (words[1] != "1") {
            fail_at(line_no, "unsupported format version '" + words[1] + "'");
          }
          break;
        case 1:
          n = parse_count(words[1], line_no, "agent count");
          if (n == 0) fail_at(line_no, "agent count must be positive");
          break;
        case 2: {
          auto c = parse_valuation_class(words[1]);
          if (!c) fail_at(line_no, "unknown class '" + words[1] + "'");
          cls = *c;
          break;
        }
        case 3: {
          auto k = parse_game_kind(words[1]);
          if (!k) fail_at(line_no, "unknown game '" + words[1] + "'");
          kind = *k;
          break;
        }
      }
      ++header_seen;
      continue;
    }

    if (key != "v" || words.size() != 4) {
      fail_at(line_no, "expected 'v <i> <j> <p>/<q>'");
    }
    const std::size_t i = parse_count(words[1], line_no, "agent id");
    const std::size_t j = parse_count(words[2], line_no, "agent id");
    if (i < 1 || i > n || j < 1 || j > n) {
      fail_at(line_no, "agent id out of range 1.." + std::to_string(n));
    }
    Rational value;
    try {
      value = parse_rational(words[3]);
    } catch (const ValidationError& e) {
      fail_at(line_no, e.what());
    }
    if (i == j && value != 0) fail_at(line_no, "nonzero diagonal entry");
    if (value == 0) fail_at(line_no, "zero entries must be omitted");
    if (!admissible(cls, value)) {
      fail_at(line_no, "value " + to_string(value) + " violates class " +
                           std::string(to_string(cls)));
    }
    if (!seen.insert({i, j}).second) {
      fail_at(line_no, "duplicate entry for (" + words[1] + ", " + words[2] +
                           ")");
    }
    arcs.push_back({i - 1, j - 1, std::move(value)});
  }
  if (header_seen < 4) {
    fail_at(line_no + 1, "incomplete header");
  }
  return Instance{label, ValuationProfile::from_arcs(n, cls, arcs), kind};
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_instance_file(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write instance file '" + path + "'");
  out << serialize_instance(instance);
  if (!out) throw ValidationError("write failed for '" + path + "'");
}

}  // namespace hedonic

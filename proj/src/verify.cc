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

#include "hedonic/verify.h"

#include <algorithm>
#include <utility>

#include "hedonic/error.h"
#include "hedonic/oracle.h"

namespace hedonic {
namespace {

bool is_finite_class(ValuationClass c) {
  return c == ValuationClass::kDuplex || c == ValuationClass::kSimple;
}

std::vector<Rational> finite_values(ValuationClass c) {
  if (c == ValuationClass::kDuplex) return {-1, 0, 1};
  return {0, 1};
}

std::size_t hamming(const std::vector<Rational>& a,
                    const std::vector<Rational>& b) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] != b[k];
  return d;
}

}  // namespace

MechanismFn bind_mechanism(MechanismId id, const AgentOrdering& ord) {
  return [id, ord](const ValuationProfile& d) {
    return run_mechanism(id, d, ord);
  };
}

DeviationSpace DeviationSpace::exhaustive(ValuationClass cls) {
  DeviationSpace s;
  s.cls = cls;
  s.mode = DeviationMode::kExhaustive;
  return s;
}

DeviationSpace DeviationSpace::grid(ValuationClass cls, Rational step) {
  DeviationSpace s;
  s.cls = cls;
  s.mode = DeviationMode::kGrid;
  s.grid_step = std::move(step);
  return s;
}

DeviationSpace DeviationSpace::sampled(ValuationClass cls,
                                       std::uint64_t samples,
                                       std::uint64_t seed) {
  DeviationSpace s;
  s.cls = cls;
  s.mode = DeviationMode::kSampled;
  s.samples = samples;
  s.seed = seed;
  return s;
}

std::vector<Rational> deviation_values(const DeviationSpace& space) {
  const bool finite = is_finite_class(space.cls);
  switch (space.mode) {
    case DeviationMode::kExhaustive:
      if (!finite) {
        throw ValidationError(
            "exhaustive deviations need a duplex or simple class");
      }
      return finite_values(space.cls);
    case DeviationMode::kGrid: {
      if (finite) {
        throw ValidationError(
            "grid deviations apply to general or non-negative classes");
      }
      if (space.grid_step <= 0) {
        throw ValidationError("grid step must be positive");
      }
      std::vector<Rational> out;
      const Rational lo = space.cls == ValuationClass::kGeneral ? -1 : 0;
      for (Rational x = lo; x <= 1; x += space.grid_step) out.push_back(x);
      // Boundary values and the magnitudes the lower-bound instances use.
      for (const Rational& x :
           {Rational(-1), Rational(0), Rational(1), Rational(1, 100),
            Rational(-1, 100), Rational(9, 10), Rational(-9, 10)}) {
        if (admissible(space.cls, x)) out.push_back(x);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case DeviationMode::kSampled:
      if (finite) {
        throw ValidationError(
            "sampled deviations apply to general or non-negative classes");
      }
      return {};
  }
  return {};
}

std::vector<std::vector<Rational>> deviation_rows(
    const DeviationSpace& space, std::size_t n, AgentId i,
    const std::vector<Rational>& truth_row) {
  if (i >= n || truth_row.size() != n) {
    throw ValidationError("deviation row request does not fit the instance");
  }
  std::vector<std::vector<Rational>> rows;

  if (space.mode == DeviationMode::kSampled) {
    deviation_values(space);  // class check
    if (space.samples > kMaxDeviationRowsPerAgent) {
      throw GuardExceeded("too many sampled deviations per agent");
    }
    // Independent stream per agent, so agent order does not shift draws.
    Rng rng(space.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    const std::int64_t lo = space.cls == ValuationClass::kGeneral ? -1000 : 0;
    for (std::uint64_t s = 0; s < space.samples; ++s) {
      std::vector<Rational> row(n);
      for (AgentId j = 0; j < n; ++j) {
        if (j != i) row[j] = Rational(rng.between(lo, 1000), 1000);
      }
      if (row != truth_row) rows.push_back(std::move(row));
    }
    return rows;
  }

  const std::vector<Rational> values = deviation_values(space);
  const std::size_t free_entries = n - 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < free_entries; ++k) {
    if (total > kMaxDeviationRowsPerAgent / values.size()) {
      throw GuardExceeded("deviation space exceeds " +
                          std::to_string(kMaxDeviationRowsPerAgent) +
                          " rows per agent");
    }
    total *= values.size();
  }
  std::vector<std::size_t> digit(n, 0);
  rows.reserve(total);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Rational> row(n);
    for (AgentId j = 0; j < n; ++j) {
      if (j != i) row[j] = values[digit[j]];
    }
    if (row != truth_row) rows.push_back(std::move(row));
    // Increment, last entry least significant, skipping the diagonal.
    for (std::size_t j = n; j-- > 0;) {
      if (j == i) continue;
      if (++digit[j] < values.size()) break;
      digit[j] = 0;
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const auto& a, const auto& b) {
                     return hamming(a, truth_row) < hamming(b, truth_row);
                   });
  return rows;
}

std::string to_string(SpStatus status) {
  switch (status) {
    case SpStatus::kHolds:
      return "holds";
    case SpStatus::kNoViolationFound:
      return "no-violation-found";
    case SpStatus::kViolated:
      return "violated";
  }
  return "?";
}

SpVerdict check_strategyproof(const MechanismFn& mechanism, GameKind kind,
                              const ValuationProfile& truth,
                              const DeviationSpace& space) {
  if (space.cls != truth.valuation_class()) {
    throw ValidationError(
        "deviation space class " + std::string(to_string(space.cls)) +
        " differs from the profile class " +
        std::string(to_string(truth.valuation_class())));
  }
  ensure_valid(truth);
  const std::size_t n = truth.agent_count();
  const Partition truthful = mechanism(truth);

  SpVerdict verdict;
  for (AgentId i = 0; i < n; ++i) {
    const Rational honest = utility(truth, kind, truthful, i);
    const std::vector<std::vector<Rational>> rows =
        deviation_rows(space, n, i, truth.row(i));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      ++verdict.deviations_checked;
      Partition outcome = mechanism(truth.with_row(i, rows[k]));
      Rational gained = utility(truth, kind, outcome, i);
      if (gained > honest) {
        verdict.status = SpStatus::kViolated;
        verdict.witness = SpWitness{i,       truth,  rows[k],
                                    k,       truthful, std::move(outcome),
                                    honest,  std::move(gained)};
        return verdict;
      }
    }
  }
  verdict.status = space.mode == DeviationMode::kExhaustive
                       ? SpStatus::kHolds
                       : SpStatus::kNoViolationFound;
  return verdict;
}

SpVerdict check_strategyproof(MechanismId id, const AgentOrdering& ord,
                              GameKind kind, const ValuationProfile& truth,
                              const DeviationSpace& space) {
  return check_strategyproof(bind_mechanism(id, ord), kind, truth, space);
}

bool replay_witness(const SpWitness& witness, const MechanismFn& mechanism,
                    GameKind kind) {
  const ValuationProfile& truth = witness.truth;
  const Partition truthful = mechanism(truth);
  const Partition deviating =
      mechanism(truth.with_row(witness.agent, witness.deviation));
  const Rational honest = utility(truth, kind, truthful, witness.agent);
  const Rational gained = utility(truth, kind, deviating, witness.agent);
  return truthful == witness.truthful_outcome &&
         deviating == witness.deviating_outcome &&
         honest == witness.utility_truthful &&
         gained == witness.utility_deviating && gained > honest;
}

void for_each_profile(ValuationClass cls, std::size_t n,
                      const std::function<bool(const ValuationProfile&)>& fn) {
  if (!is_finite_class(cls)) {
    throw ValidationError("profile enumeration needs a duplex or simple class");
  }
  const std::vector<Rational> values = finite_values(cls);
  const std::size_t entries = n * (n - 1);
  constexpr std::uint64_t kMaxProfiles = std::uint64_t{1} << 24;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) {
    total *= values.size();
    if (total > kMaxProfiles) {
      throw GuardExceeded("profile enumeration exceeds 2^24 profiles");
    }
  }
  std::vector<std::pair<AgentId, AgentId>> cells;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::vector<std::size_t> digit(entries, 0);
  std::vector<Arc> arcs;
  for (std::uint64_t count = 0; count < total; ++count) {
    arcs.clear();
    for (std::size_t k = 0; k < entries; ++k) {
      if (values[digit[k]] != 0) {
        arcs.push_back({cells[k].first, cells[k].second, values[digit[k]]});
      }
    }
    if (!fn(ValuationProfile::from_arcs(n, cls, arcs))) return;
    for (std::size_t k = entries; k-- > 0;) {
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
    }
  }
}

SpSweepResult sweep_strategyproof(const MechanismFn& mechanism, GameKind kind,
                                  ValuationClass cls, std::size_t n) {
  SpSweepResult result;
  const DeviationSpace space = DeviationSpace::exhaustive(cls);
  for_each_profile(cls, n, [&](const ValuationProfile& truth) {
    SpVerdict v = check_strategyproof(mechanism, kind, truth, space);
    ++result.profiles_checked;
    result.deviations_checked += v.deviations_checked;
    if (v.violated()) {
      result.verdict = std::move(v);
      return false;
    }
    return true;
  });
  if (!result.verdict.violated()) {
    result.verdict.status = SpStatus::kHolds;
    result.verdict.deviations_checked = result.deviations_checked;
  }
  return result;
}

std::optional<AcceptabilityCounterexample> check_acceptable(
    const MechanismFn& mechanism, const std::vector<Instance>& instances) {
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    Partition outcome = mechanism(inst.profile);
    Rational welfare = social_welfare(inst.profile, inst.kind, outcome);
    if (welfare < 0) {
      return AcceptabilityCounterexample{k, inst.label, std::move(outcome),
                                         std::move(welfare)};
    }
  }
  return std::nullopt;
}

std::optional<AcceptabilityCounterexample> check_acceptable(
    MechanismId id, const std::vector<Instance>& instances) {
  return check_acceptable(
      [id](const ValuationProfile& d) {
        return run_mechanism(id, d, AgentOrdering::identity(d.agent_count()));
      },
      instances);
}

Ratio Ratio::of(const Rational& opt, const Rational& mechanism) {
  Ratio r;
  if (opt == 0) {
    r.kind_ = Kind::kUndefined;
  } else if (mechanism <= 0) {
    r.kind_ = Kind::kInfinite;
  } else {
    r.kind_ = Kind::kFinite;
    r.value_ = opt / mechanism;
  }
  return r;
}

bool operator<(const Ratio& a, const Ratio& b) {
  auto rank = [](Ratio::Kind k) {
    switch (k) {
      case Ratio::Kind::kUndefined:
        return 0;
      case Ratio::Kind::kFinite:
        return 1;
      case Ratio::Kind::kInfinite:
        return 2;
    }
    return 0;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
  return a.kind_ == Ratio::Kind::kFinite && a.value_ < b.value_;
}

std::string to_string(const Ratio& r) {
  switch (r.kind()) {
    case Ratio::Kind::kFinite:
      return to_string(r.value());
    case Ratio::Kind::kInfinite:
      return "inf";
    case Ratio::Kind::kUndefined:
      return "undef";
  }
  return "?";
}

RatioReport approx_ratio(const MechanismFn& mechanism,
                         const Instance& instance) {
  const ValuationProfile& v = instance.profile;
  Partition outcome = mechanism(v);
  Rational mech = social_welfare(v, instance.kind, outcome);
  OptResult opt = optimal_partition(v, instance.kind);
  Ratio ratio = Ratio::of(opt.welfare, mech);
  return RatioReport{instance.label,    v.agent_count(), std::move(outcome),
                     std::move(mech),   std::move(opt.welfare),
                     std::move(ratio)};
}

RatioReport approx_ratio(MechanismId id, const Instance& instance,
                         const std::optional<AgentOrdering>& ord) {
  return approx_ratio(
      bind_mechanism(id, ord ? *ord
                             : AgentOrdering::identity(
                                   instance.profile.agent_count())),
      instance);
}

std::vector<Instance> random_instances(const RandomInstanceSpec& spec,
                                       std::size_t trials,
                                       std::uint64_t seed) {
  if (spec.min_agents < 1 || spec.min_agents > spec.max_agents) {
    throw ValidationError("bad agent-count range for random instances");
  }
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(spec.min_agents),
                    static_cast<std::int64_t>(spec.max_agents)));
    Instance inst = gen_random(spec.cls, n, spec.density, rng, spec.kind);
    inst.label += " seed=" + std::to_string(seed) +
                  " trial=" + std::to_string(t);
    out.push_back(std::move(inst));
  }
  return out;
}

RatioSweep ratio_sweep(MechanismId id, const RandomInstanceSpec& spec,
                       std::size_t trials, std::uint64_t seed) {
  RatioSweep sweep;
  for (const Instance& inst : random_instances(spec, trials, seed)) {
    RatioReport report = approx_ratio(id, inst);
    if (report.ratio.kind() == Ratio::Kind::kUndefined) {
      ++sweep.undefined_count;
    } else if (sweep.max_ratio < report.ratio) {
      sweep.max_ratio = report.ratio;
    }
    sweep.reports.push_back(std::move(report));
  }
  return sweep;
}

}  // namespace hedonic

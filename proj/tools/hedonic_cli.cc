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

// hedonic: generate instances, run mechanisms, compute optima and ratios,
// verify strategyproofness and acceptability, and run the reproduction
// suite. Output is line-oriented "key value" text.
//
// Exit codes: 0 ok, 2 usage, 3 validation, 4 guard exceeded,
// 5 reproduction failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hedonic/error.h"
#include "hedonic/instances.h"
#include "hedonic/mechanisms.h"
#include "hedonic/oracle.h"
#include "hedonic/rational.h"
#include "hedonic/repro.h"
#include "hedonic/verify.h"

#ifndef HEDONIC_DEFAULT_CORPUS_DIR
#define HEDONIC_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace {

using namespace hedonic;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;
constexpr int kExitRepro = 5;

// Raised for flag values CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

MechanismId mechanism_arg(const std::string& text) {
  auto id = parse_mechanism_id(text);
  if (!id) throw UsageError("unknown mechanism '" + text + "'");
  return *id;
}

ValuationClass class_arg(const std::string& text) {
  auto c = parse_valuation_class(text);
  if (!c) throw UsageError("unknown class '" + text + "'");
  return *c;
}

GameKind game_arg(const std::string& text) {
  auto k = parse_game_kind(text);
  if (!k) throw UsageError("unknown game '" + text + "'");
  return *k;
}

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(flag + ": not a rational: '" + text + "'");
  }
}

Instance load(const std::string& path, const std::string& game) {
  Instance inst = read_instance_file(path);
  if (!game.empty()) inst.kind = game_arg(game);
  return inst;
}

void print_partition(std::ostream& out, const Partition& p) {
  for (const Coalition& c : p.coalitions()) {
    out << "coalition {";
    for (std::size_t k = 0; k < c.size(); ++k) {
      out << (k ? "," : "") << c[k] + 1;
    }
    out << "}\n";
  }
}

struct GenOptions {
  std::string family;
  int variant = 1;
  std::size_t n = 0;
  std::string eps = "1/100";
  std::string alpha = "1/100";
  std::string beta = "1/10000";
  std::string cls = "simple";
  std::string density = "1/2";
  std::uint64_t seed = 1;
  std::string game = "ashg";
  std::string out;
};

Instance generate(const GenOptions& o) {
  const std::string& f = o.family;
  if (f == "general-gap") {
    return gen_general_gap(rational_arg("--eps", o.eps), o.variant);
  }
  if (f == "nonneg-cycle") {
    return gen_nonneg_cycle(o.n, rational_arg("--alpha", o.alpha),
                            rational_arg("--beta", o.beta));
  }
  if (f == "duplex-star") return gen_duplex_star(o.n, o.variant);
  if (f == "simple-cycle7") return gen_simple_cycle7(o.variant);
  if (f == "four-cycle") return gen_four_cycle();
  if (f == "complete-reciprocal") return gen_complete_reciprocal(o.n);
  if (f == "random") {
    return gen_random(class_arg(o.cls), o.n,
                      rational_arg("--density", o.density), o.seed,
                      game_arg(o.game));
  }
  throw UsageError("unknown family '" + f + "'");
}

int cmd_gen(const GenOptions& o) {
  const Instance inst = generate(o);
  if (o.out.empty()) {
    std::cout << serialize_instance(inst);
  } else {
    write_instance_file(o.out, inst);
    std::cout << "label " << inst.label << "\n"
              << "agents " << inst.profile.agent_count() << "\n";
  }
  return 0;
}

struct RunOptions {
  std::string mechanism;
  std::string order = "identity";
  std::string game;
  std::string file;
};

int cmd_run(const RunOptions& o) {
  const MechanismId id = mechanism_arg(o.mechanism);
  const Instance inst = load(o.file, o.game);
  const AgentOrdering ord =
      AgentOrdering::parse(o.order, inst.profile.agent_count());
  const Partition p = run_mechanism(id, inst.profile, ord);
  std::cout << "mechanism " << to_string(id) << "\n";
  print_partition(std::cout, p);
  std::cout << "welfare "
            << to_string(social_welfare(inst.profile, inst.kind, p)) << "\n";
  return 0;
}

int cmd_opt(const RunOptions& o) {
  const Instance inst = load(o.file, o.game);
  const OptResult r = optimal_partition(inst.profile, inst.kind);
  print_partition(std::cout, r.best);
  std::cout << "welfare " << to_string(r.welfare) << "\n"
            << "partitions " << r.partitions_examined << "\n";
  return 0;
}

int cmd_ratio(const RunOptions& o) {
  const MechanismId id = mechanism_arg(o.mechanism);
  const Instance inst = load(o.file, o.game);
  const RatioReport r = approx_ratio(
      id, inst, AgentOrdering::parse(o.order, inst.profile.agent_count()));
  std::cout << "opt " << to_string(r.opt_welfare) << "\n"
            << "mech " << to_string(r.mechanism_welfare) << "\n"
            << "ratio " << to_string(r.ratio) << "\n";
  return 0;
}

struct SpOptions {
  RunOptions run;
  std::string mode = "exhaustive";
  std::string step = "1/10";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

int cmd_verify_sp(const SpOptions& o) {
  const MechanismId id = mechanism_arg(o.run.mechanism);
  const Instance inst = load(o.run.file, o.run.game);
  const AgentOrdering ord =
      AgentOrdering::parse(o.run.order, inst.profile.agent_count());
  const ValuationClass cls = inst.profile.valuation_class();
  DeviationSpace space;
  if (o.mode == "exhaustive") {
    space = DeviationSpace::exhaustive(cls);
  } else if (o.mode == "grid") {
    space = DeviationSpace::grid(cls, rational_arg("--step", o.step));
  } else if (o.mode == "sampled") {
    space = DeviationSpace::sampled(cls, o.samples, o.seed);
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  const SpVerdict v = check_strategyproof(id, ord, inst.kind, inst.profile,
                                          space);
  std::cout << "status " << to_string(v.status) << "\n"
            << "deviations " << v.deviations_checked << "\n";
  if (v.witness) {
    const SpWitness& w = *v.witness;
    std::cout << "agent " << w.agent + 1 << "\n";
    std::cout << "row";
    for (const Rational& x : w.deviation) std::cout << " " << to_string(x);
    std::cout << "\n"
              << "truthful " << to_string(w.truthful_outcome) << "\n"
              << "deviating " << to_string(w.deviating_outcome) << "\n"
              << "utility_truthful " << to_string(w.utility_truthful) << "\n"
              << "utility_deviating " << to_string(w.utility_deviating)
              << "\n";
  }
  return 0;
}

int cmd_verify_acceptable(const std::string& mechanism,
                          const std::vector<std::string>& files) {
  const MechanismId id = mechanism_arg(mechanism);
  std::vector<Instance> instances;
  for (const std::string& f : files) instances.push_back(read_instance_file(f));
  const auto bad = check_acceptable(id, instances);
  std::cout << "instances " << instances.size() << "\n";
  if (!bad) {
    std::cout << "acceptable yes\n";
    return 0;
  }
  std::cout << "acceptable no\n"
            << "file " << files[bad->index] << "\n"
            << "outcome " << to_string(bad->outcome) << "\n"
            << "welfare " << to_string(bad->welfare) << "\n";
  return 0;
}

int cmd_repro(const std::string& only, const std::string& corpus) {
  const repro::RunSummary summary =
      repro::run_criteria(repro::ReproContext{corpus}, only, std::cout);
  return summary.all_passed() ? 0 : kExitRepro;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategyproof mechanisms for hedonic games"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("family", gen.family,
                      "general-gap, nonneg-cycle, duplex-star, "
                      "simple-cycle7, four-cycle, complete-reciprocal, random")
      ->required();
  gen_cmd->add_option("--variant", gen.variant, "instance variant (1 or 2)");
  gen_cmd->add_option("--n", gen.n, "number of agents");
  gen_cmd->add_option("--eps", gen.eps, "epsilon as p/q");
  gen_cmd->add_option("--alpha", gen.alpha, "alpha as p/q");
  gen_cmd->add_option("--beta", gen.beta, "beta as p/q");
  gen_cmd->add_option("--class", gen.cls, "valuation class");
  gen_cmd->add_option("--density", gen.density, "arc probability as p/q");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--game", gen.game, "ashg or fhg");
  gen_cmd->add_option("--out", gen.out, "write to this file");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run a mechanism");
  run_cmd->add_option("--mechanism", run.mechanism,
                      "grand, singletons, duplex-pairing, matching")
      ->required();
  run_cmd->add_option("--order", run.order, "identity or 1-based list");
  run_cmd->add_option("--game", run.game, "override the file's game");
  run_cmd->add_option("file", run.file, "instance file")->required();

  RunOptions opt;
  auto* opt_cmd = app.add_subcommand("opt", "optimal partition");
  opt_cmd->add_option("--game", opt.game, "override the file's game");
  opt_cmd->add_option("file", opt.file, "instance file")->required();

  RunOptions ratio;
  auto* ratio_cmd = app.add_subcommand("ratio", "approximation ratio");
  ratio_cmd->add_option("--mechanism", ratio.mechanism, "mechanism")
      ->required();
  ratio_cmd->add_option("--order", ratio.order, "identity or 1-based list");
  ratio_cmd->add_option("--game", ratio.game, "override the file's game");
  ratio_cmd->add_option("file", ratio.file, "instance file")->required();

  SpOptions sp;
  auto* sp_cmd = app.add_subcommand("verify-sp", "search for manipulations");
  sp_cmd->add_option("--mechanism", sp.run.mechanism, "mechanism")
      ->required();
  sp_cmd->add_option("--order", sp.run.order, "identity or 1-based list");
  sp_cmd->add_option("--game", sp.run.game, "override the file's game");
  sp_cmd->add_option("--mode", sp.mode, "exhaustive, grid or sampled");
  sp_cmd->add_option("--step", sp.step, "grid step as p/q");
  sp_cmd->add_option("--samples", sp.samples, "rows per agent when sampled");
  sp_cmd->add_option("--seed", sp.seed, "sampling seed");
  sp_cmd->add_option("file", sp.run.file, "instance file")->required();

  std::string acc_mechanism;
  std::vector<std::string> acc_files;
  auto* acc_cmd =
      app.add_subcommand("verify-acceptable", "check welfare is nonnegative");
  acc_cmd->add_option("--mechanism", acc_mechanism, "mechanism")->required();
  acc_cmd->add_option("files", acc_files, "instance files")->required();

  std::string only;
  std::string corpus = HEDONIC_DEFAULT_CORPUS_DIR;
  auto* repro_cmd =
      app.add_subcommand("repro", "run the reproduction criteria");
  repro_cmd->add_option("--only", only, "criterion id or tag");
  repro_cmd->add_option("--corpus", corpus, "golden file directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*opt_cmd) return cmd_opt(opt);
    if (*ratio_cmd) return cmd_ratio(ratio);
    if (*sp_cmd) return cmd_verify_sp(sp);
    if (*acc_cmd) return cmd_verify_acceptable(acc_mechanism, acc_files);
    if (*repro_cmd) return cmd_repro(only, corpus);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

// Copyright 2026 The Prefaxiom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prefaxiom/cli.h"

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "prefaxiom/error.h"
#include "prefaxiom/profile_io.h"

namespace prefaxiom {
namespace {

using cli::Format;

const std::map<std::string, Format> kFormats = {
    {"markdown", Format::kMarkdown},
    {"json", Format::kJson},
    {"csv", Format::kCsv}};

int DefaultJobs() {
  const char* env = std::getenv("PREFAXIOM_JOBS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long jobs = std::strtol(env, &end, 10);
  return (end != env && *end == '\0' && jobs > 0) ? static_cast<int>(jobs) : 1;
}

EpsilonPolicy ParseEpsilon(const std::string& text) {
  if (text == "limit") return EpsilonPolicy::Limit();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must be a number or 'limit', got '" + text + "'");
  }
  return EpsilonPolicy::Finite(value);
}

RuleId ParseRule(const std::string& text) {
  const std::optional<RuleId> rule = ParseRuleName(text);
  if (!rule) {
    throw Error(ErrorCode::kInvalidArgument, "unknown rule '" + text + "'");
  }
  return *rule;
}

// "all" expands to every axiom the rule can be checked against.
std::vector<AxiomId> ParseAxioms(const std::string& text,
                                 const RuleUnderTest& rule) {
  std::vector<AxiomId> out;
  if (text == "all") {
    for (AxiomId a : kAllAxioms) {
      if (IsOrdinal(a) || rule.ProducesDistribution()) out.push_back(a);
    }
    return out;
  }
  if (text == "ordinal") {
    return {std::begin(kOrdinalAxioms), std::end(kOrdinalAxioms)};
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::optional<AxiomId> axiom = ParseAxiomName(item);
    if (!axiom) {
      throw Error(ErrorCode::kInvalidArgument, "unknown axiom '" + item + "'");
    }
    out.push_back(*axiom);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no axioms given");
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchemaError:
      return kExitSchema;
    case ErrorCode::kDisconnectedGraph:
      return kExitDisconnected;
    case ErrorCode::kSpaceTooLarge:
      return kExitSpaceTooLarge;
    default:
      return kExitError;
  }
}

struct RuleFlags {
  std::string rule;
  std::string tie_policy = "group";
  std::string majority_ties = "half-point";
  std::string epsilon = "0.001";

  void Register(CLI::App* app, bool rule_required) {
    auto* opt = app->add_option("--rule", rule,
                                "borda, copeland, mle-standard, mle-copeland, "
                                "mle-gpm or gpmd-limit");
    if (rule_required) opt->required();
    app->add_option("--tie-policy", tie_policy,
                    "Equal scores: group or lexicographic")
        ->check(CLI::IsMember({"group", "lexicographic"}))
        ->capture_default_str();
    app->add_option("--majority-ties", majority_ties,
                    "Exact pairwise ties: half-point or strict")
        ->check(CLI::IsMember({"half-point", "strict"}))
        ->capture_default_str();
    app->add_option("--epsilon", epsilon, "Target epsilon for mle-gpm")
        ->capture_default_str();
  }

  RuleUnderTest Build() const {
    RuleOptions options;
    options.ranking_ties = tie_policy == "lexicographic"
                               ? RankingTiePolicy::kLexicographic
                               : RankingTiePolicy::kGroupTies;
    options.majority_ties = majority_ties == "strict"
                                ? MajorityTiePolicy::kStrictOnly
                                : MajorityTiePolicy::kHalfPoint;
    options.epsilon = ParseEpsilon(epsilon);
    return RuleUnderTest(ParseRule(rule), options);
  }
};

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Axiomatic checks for preference aggregation rules",
               "prefaxiom");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  std::string format_name = "markdown";
  int jobs = DefaultJobs();
  app.add_option("--format", format_name, "markdown, json or csv")
      ->check(CLI::IsMember({"markdown", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (default $PREFAXIOM_JOBS)")
      ->check(CLI::PositiveNumber);

  std::string input;
  RuleFlags rule_flags;

  auto* tally = app.add_subcommand("tally", "Pairwise tally of a profile");
  tally->add_option("input", input, "Profile JSON")->required();

  auto* rank = app.add_subcommand("rank", "Aggregate a profile with a rule");
  rank->add_option("input", input, "Profile JSON")->required();
  rule_flags.Register(rank, false);
  rule_flags.rule = "mle-standard";

  std::string checks = "all";
  double tol = 1e-6;
  std::string group_epsilon = "limit";
  auto* axioms = app.add_subcommand("axioms", "Check axioms on a profile");
  axioms->add_option("input", input, "Profile JSON")->required();
  rule_flags.Register(axioms, true);
  axioms->add_option("--checks", checks,
                     "all, ordinal or a comma-separated list")
      ->capture_default_str();
  axioms->add_option("--tol", tol, "Distribution tolerance")
      ->capture_default_str();
  axioms->add_option("--group-epsilon", group_epsilon,
                     "Epsilon for the group matching check, or limit")
      ->capture_default_str();

  std::string gpmd_epsilon = "limit";
  auto* gpmd = app.add_subcommand("gpmd", "Group matching distribution");
  gpmd->add_option("input", input, "Profile JSON")->required();
  gpmd->add_option("--epsilon", gpmd_epsilon, "Epsilon in (0, 1/2) or limit")
      ->capture_default_str();

  std::string space_text;
  std::string axiom_text;
  std::optional<std::uint64_t> seed;
  double budget = kDefaultMaxSpace;
  std::string out_path;
  auto* search = app.add_subcommand("search", "Search for a counterexample");
  rule_flags.Register(search, true);
  search->add_option("--axiom", axiom_text,
                     "Axiom, comma-separated list, ordinal or all")
      ->required();
  search->add_option("--space", space_text,
                     "exhaustive-complete:N:M, random-complete:N:M:TRIALS, "
                     "assumption1:N or assumption1-random:N:TRIALS[:LABELERS]")
      ->required();
  search->add_option("--seed", seed, "Seed for random spaces");
  search->add_option("--tol", tol, "Distribution tolerance")
      ->capture_default_str();
  search->add_option("--group-epsilon", group_epsilon,
                     "Epsilon for the group matching check, or limit")
      ->capture_default_str();
  search->add_option("--budget", budget, "Largest space searched")
      ->capture_default_str();
  search->add_option("--out", out_path, "Write the counterexample profile");

  cli::CyclesArgs cycles_args;
  std::uint64_t cycles_seed = 0;
  auto* cycles = app.add_subcommand("experiment-cycles",
                                    "How often no Condorcet winner exists");
  cycles->add_option("--n-list", cycles_args.n_list, "Candidate counts")
      ->delimiter(',')
      ->required();
  cycles->add_option("--m", cycles_args.m, "Voters")->capture_default_str();
  cycles->add_option("--trials", cycles_args.trials, "Trials per count")
      ->capture_default_str();
  cycles->add_option("--seed", cycles_seed, "Seed")->required();

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Annotated walkthroughs");
  demo->add_option("name", demo_name,
                   "condorcet-paradox, single-voter-cycle or "
                   "borda-vs-copeland")
      ->required()
      ->check(CLI::IsMember(
          {"condorcet-paradox", "single-voter-cycle", "borda-vs-copeland"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  const Format format = kFormats.at(format_name);
  try {
    int code = kExitOk;
    std::optional<cli::Report> report;
    if (tally->parsed()) {
      report = cli::CmdTally(LoadProfile(input));
    } else if (rank->parsed()) {
      report = cli::CmdRank(LoadProfile(input), rule_flags.Build());
    } else if (axioms->parsed()) {
      const RuleUnderTest rule = rule_flags.Build();
      CheckOptions options{tol, ParseEpsilon(group_epsilon)};
      cli::CommandResult result = cli::CmdAxioms(
          LoadProfile(input), rule, ParseAxioms(checks, rule), options);
      report = std::move(result.report);
      code = result.exit_code;
    } else if (gpmd->parsed()) {
      report = cli::CmdGpmd(LoadProfile(input), ParseEpsilon(gpmd_epsilon));
    } else if (search->parsed()) {
      const RuleUnderTest rule = rule_flags.Build();
      cli::SearchArgs args{ParseAxioms(axiom_text, rule),
                           ParseSearchSpace(space_text, seed.value_or(0)),
                           seed,
                           {},
                           std::nullopt};
      const bool random =
          std::holds_alternative<RandomComplete>(args.space) ||
          std::holds_alternative<Assumption1Random>(args.space);
      if (random && !seed) {
        throw Error(ErrorCode::kInvalidArgument,
                    "random search spaces need --seed");
      }
      args.options.check = {tol, ParseEpsilon(group_epsilon)};
      args.options.jobs = jobs;
      args.options.max_space = budget;
      if (!out_path.empty()) args.out_path = out_path;
      report = cli::CmdSearch(rule, args);
    } else if (cycles->parsed()) {
      cycles_args.seed = cycles_seed;
      cycles_args.jobs = jobs;
      report = cli::CmdExperimentCycles(cycles_args);
    } else if (demo->parsed()) {
      report = cli::CmdDemo(demo_name, jobs);
    }
    std::ostringstream rendered;
    report->Render(format, rendered);
    out << rendered.str();
    return code;
  } catch (const Error& e) {
    err << "prefaxiom: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "prefaxiom: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace prefaxiom

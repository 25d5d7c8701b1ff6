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

#include "cli/commands.h"

#include <cmath>
#include <fstream>

#include "prefaxiom/cli.h"
#include "prefaxiom/error.h"
#include "prefaxiom/profile_io.h"
#include "prefaxiom/reward.h"
#include "prefaxiom/rules.h"

namespace prefaxiom::cli {
namespace {

using Json = nlohmann::ordered_json;

// Profiles up to this size get an exact enumeration column.
constexpr double kExactEnumerationLimit = 1e6;

std::string KindName(const PreferenceProfile& profile) {
  return profile.IsComplete() ? "complete" : "generalized";
}

std::string JoinAxioms(const std::vector<AxiomId>& axioms) {
  std::string out;
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    if (k) out += ",";
    out += AxiomName(axioms[k]);
  }
  return out;
}

std::string DescribeVoter(const Voter& voter, const CandidateSet& names) {
  if (voter.HasRanking()) return FormatRanking(voter.ranking(), names);
  std::string out;
  bool first = true;
  for (const PairPreference& c : voter.Comparisons()) {
    if (!first) out += "; ";
    first = false;
    out += names.name(c.winner) + " > " + names.name(c.loser);
  }
  return out;
}

void AddBallots(Report& report, const PreferenceProfile& profile) {
  Table& table = report.AddTable("ballots", {"voter", "preference"});
  for (const Voter& v : profile.voters()) {
    table.rows.push_back({v.id, DescribeVoter(v, profile.candidates())});
  }
}

void AddPairs(Report& report, const PairwiseTally& tally,
              const CandidateSet& names) {
  Table& table = report.AddTable(
      "pairs", {"pair", "wins", "losses", "proportion", "value"});
  Json pairs = Json::array();
  for (int i = 0; i < tally.size(); ++i) {
    for (int j = i + 1; j < tally.size(); ++j) {
      const std::optional<Rational> p = tally.TryProp(i, j);
      table.rows.push_back({names.name(i) + " > " + names.name(j),
                            ToString(tally.wins(i, j)),
                            ToString(tally.wins(j, i)),
                            p ? ToString(*p) : "undefined",
                            p ? FormatDouble(ToDouble(*p)) : "-"});
      Json pair;
      pair["first"] = names.name(i);
      pair["second"] = names.name(j);
      pair["wins"] = ToString(tally.wins(i, j));
      pair["losses"] = ToString(tally.wins(j, i));
      pair["proportion"] = p ? RationalJson(*p) : Json(nullptr);
      pairs.push_back(std::move(pair));
    }
  }
  report.data()["pairs"] = std::move(pairs);
}

void AddMajority(Report& report, const PairwiseTally& tally,
                 const CandidateSet& names) {
  const std::optional<int> winner = CondorcetWinner(tally);
  report.Field("condorcet winner", winner ? names.name(*winner) : "none");
  report.data()["condorcet_winner"] =
      winner ? Json(names.name(*winner)) : Json(nullptr);
  if (!tally.AllPairsDefined()) {
    report.data()["majority_cycle"] = nullptr;
    return;
  }
  const std::optional<std::vector<int>> cycle =
      FindCondorcetCycle(ComputeMajorityRelation(tally));
  if (cycle) {
    std::string text;
    Json members = Json::array();
    for (int c : *cycle) {
      text += names.name(c) + " > ";
      members.push_back(names.name(c));
    }
    text += names.name(cycle->front());
    report.Field("majority cycle", text);
    report.data()["majority_cycle"] = std::move(members);
  } else {
    report.Field("majority cycle", "none");
    report.data()["majority_cycle"] = nullptr;
  }
}

// Scores, rewards and probabilities per candidate.
void AddRuleOutput(Report& report, const RuleOutput& output,
                   const CandidateSet& names, const std::string& key) {
  std::vector<std::string> columns{"candidate"};
  if (output.scores) {
    columns.push_back("score");
    columns.push_back("score value");
  }
  if (output.rewards) columns.push_back("reward");
  if (output.distribution) columns.push_back("probability");
  Table& table = report.AddTable(key, columns);

  Json data;
  data["ranking"] = RankingJson(output.ranking, names);
  Json rows = Json::array();
  for (int i = 0; i < names.size(); ++i) {
    std::vector<std::string> row{names.name(i)};
    Json entry;
    entry["candidate"] = names.name(i);
    if (output.scores) {
      const Rational& s = output.scores->values[i];
      row.push_back(ToString(s));
      row.push_back(FormatDouble(ToDouble(s)));
      entry["score"] = RationalJson(s);
    }
    if (output.rewards) {
      row.push_back(FormatDouble(output.rewards->r[i]));
      entry["reward"] = Num(output.rewards->r[i]);
    }
    if (output.distribution) {
      row.push_back(FormatDouble((*output.distribution)[i]));
      entry["probability"] = Num((*output.distribution)[i]);
    }
    table.rows.push_back(std::move(row));
    rows.push_back(std::move(entry));
  }
  data["candidates"] = std::move(rows);
  if (output.rewards) {
    data["solver"] = StatusJson(output.rewards->status, names);
  }
  report.data()[key] = std::move(data);
}

void AddAxiomTable(Report& report, const std::vector<AxiomReport>& reports,
                   const CandidateSet& names) {
  Table& table = report.AddTable(
      "axioms", {"axiom", "applicable", "satisfied", "verdict", "witness"});
  Json list = Json::array();
  for (const AxiomReport& r : reports) {
    table.rows.push_back({std::string(AxiomName(r.axiom)),
                          r.applicable ? "yes" : "no",
                          r.satisfied ? "yes" : "no", Verdict(r),
                          DescribeWitness(r, names)});
    list.push_back(AxiomReportJson(r, names));
  }
  report.data()["axioms"] = std::move(list);
}

void AddDistribution(Report& report, const std::string& key,
                     const ResponseDistribution& dist,
                     const std::optional<std::vector<Rational>>& exact,
                     const CandidateSet& names) {
  std::vector<std::string> columns{"candidate", "probability"};
  if (exact) columns.push_back("exact");
  Table& table = report.AddTable(key, columns);
  Json rows = Json::array();
  for (int i = 0; i < dist.size(); ++i) {
    std::vector<std::string> row{names.name(i), FormatDouble(dist[i])};
    Json entry;
    entry["candidate"] = names.name(i);
    entry["probability"] = Num(dist[i]);
    if (exact) {
      row.push_back(ToString((*exact)[i]));
      entry["exact"] = ToString((*exact)[i]);
    }
    table.rows.push_back(std::move(row));
    rows.push_back(std::move(entry));
  }
  report.data()[key] = std::move(rows);
}

std::string PolicyName(const EpsilonPolicy& policy) {
  return policy.is_limit() ? "limit" : FormatDouble(policy.epsilon());
}

}  // namespace

Report CmdTally(const PreferenceProfile& profile) {
  Report report("tally", "Pairwise tally");
  const CandidateSet& names = profile.candidates();
  const PairwiseTally tally = Tally(profile);
  report.Field("candidates", std::to_string(names.size()));
  report.Field("voters", std::to_string(profile.num_voters()));
  report.Field("profile", KindName(profile));
  report.data()["candidates"] = names.names();
  report.data()["voters"] = profile.num_voters();
  report.data()["profile"] = KindName(profile);

  std::vector<std::string> columns{"wins"};
  for (const std::string& name : names.names()) columns.push_back(name);
  Table& wins = report.AddTable("win matrix", columns);
  Json matrix = Json::array();
  for (int i = 0; i < names.size(); ++i) {
    std::vector<std::string> row{names.name(i)};
    Json json_row = Json::array();
    for (int j = 0; j < names.size(); ++j) {
      row.push_back(i == j ? "-" : ToString(tally.wins(i, j)));
      json_row.push_back(ToString(tally.wins(i, j)));
    }
    wins.rows.push_back(std::move(row));
    matrix.push_back(std::move(json_row));
  }
  report.data()["wins"] = std::move(matrix);
  AddPairs(report, tally, names);
  AddMajority(report, tally, names);
  return report;
}

Report CmdRank(const PreferenceProfile& profile, const RuleUnderTest& rule) {
  Report report("rank", "Ranking by " + std::string(rule.name()));
  const CandidateSet& names = profile.candidates();
  const RuleOutput output = rule.Apply(profile, true);
  report.Field("rule", std::string(rule.name()));
  report.Field("ranking", FormatRanking(output.ranking, names));
  report.data()["rule"] = std::string(rule.name());
  if (rule.id() == RuleId::kMleGpm) {
    report.Field("epsilon", PolicyName(rule.options().epsilon));
    report.data()["epsilon"] = PolicyName(rule.options().epsilon);
  }
  if (output.rewards) {
    report.Field("solver", DescribeStatus(output.rewards->status, names));
  }
  AddRuleOutput(report, output, names, "result");
  if (output.rewards && !output.distribution) {
    report.Note("No finite reward vector exists; the ranking is read off the "
                "exact scores.");
  }
  return report;
}

CommandResult CmdAxioms(const PreferenceProfile& profile,
                        const RuleUnderTest& rule,
                        const std::vector<AxiomId>& checks,
                        const CheckOptions& options) {
  Report report("axioms", "Axiom checks for " + std::string(rule.name()));
  const CandidateSet& names = profile.candidates();
  bool wants_distribution = false;
  for (AxiomId a : checks) {
    if (IsOrdinal(a)) continue;
    if (!rule.ProducesDistribution()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(rule.name()) + " has no distribution to check " +
                      std::string(AxiomName(a)) + " against");
    }
    wants_distribution = true;
  }
  const RuleOutput output = rule.Apply(profile, wants_distribution);
  std::vector<AxiomReport> reports;
  bool violated = false;
  for (AxiomId a : checks) {
    reports.push_back(EvaluateAxiom(a, profile, output, options));
    violated = violated || reports.back().violated();
  }
  report.Field("rule", std::string(rule.name()));
  report.Field("ranking", FormatRanking(output.ranking, names));
  report.Field("tolerance", FormatDouble(options.tol));
  report.Field("result", violated ? "violation found" : "all checks pass");
  report.data()["rule"] = std::string(rule.name());
  report.data()["ranking"] = RankingJson(output.ranking, names);
  report.data()["tolerance"] = Num(options.tol);
  report.data()["group_epsilon"] = PolicyName(options.gpm_policy);
  AddAxiomTable(report, reports, names);
  report.data()["all_satisfied"] = !violated;
  return {std::move(report), violated ? kExitViolation : kExitOk};
}

Report CmdGpmd(const PreferenceProfile& profile, const EpsilonPolicy& policy) {
  Report report("gpmd", "Group preference matching distribution");
  const CandidateSet& names = profile.candidates();
  const ResponseDistribution dist = Gpmd(profile, policy);
  report.Field("epsilon", PolicyName(policy));
  report.Field("voters", std::to_string(profile.num_voters()));
  report.data()["epsilon"] = PolicyName(policy);
  std::optional<std::vector<Rational>> exact;
  if (policy.is_limit()) exact = FirstPlaceShares(profile);
  AddDistribution(report, "distribution", dist, exact, names);
  return report;
}

Report CmdSearch(const RuleUnderTest& rule, const SearchArgs& args) {
  Report report("search", "Counterexample search");
  const SearchResult result =
      CounterexampleSearch(rule, args.axioms, args.space, args.options);
  report.Field("rule", std::string(rule.name()));
  report.Field("axioms", JoinAxioms(args.axioms));
  report.Field("space", DescribeSpace(args.space));
  report.Field("seed", args.seed ? std::to_string(*args.seed) : "-");
  report.Field("tolerance", FormatDouble(args.options.check.tol));
  report.Field("examined", std::to_string(result.examined));
  report.Field("applicable", std::to_string(result.applicable));
  Json& data = report.data();
  data["rule"] = std::string(rule.name());
  data["axioms"] = Json::array();
  for (AxiomId a : args.axioms) data["axioms"].push_back(AxiomName(a));
  data["space"] = DescribeSpace(args.space);
  data["seed"] = args.seed ? Json(*args.seed) : Json(nullptr);
  data["tolerance"] = Num(args.options.check.tol);
  data["examined"] = result.examined;
  data["applicable"] = result.applicable;
  if (!result.counterexample) {
    report.Field("result", "exhausted, no violation");
    data["counterexample"] = nullptr;
    return report;
  }
  const Counterexample& found = *result.counterexample;
  const CandidateSet& names = found.profile.candidates();
  report.Field("result", "violation at index " + std::to_string(found.index));
  report.Field("violated", std::string(AxiomName(found.report.axiom)));
  report.Field("witness", DescribeWitness(found.report, names));
  AddBallots(report, found.profile);
  Json ce;
  ce["index"] = found.index;
  ce["profile"] = ProfileJson(found.profile);
  ce["report"] = AxiomReportJson(found.report, names);
  data["counterexample"] = std::move(ce);
  if (args.out_path) {
    std::ofstream file(*args.out_path);
    file << SerializeProfile(found.profile);
    if (!file) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write " + *args.out_path);
    }
    report.Field("written to", *args.out_path);
  }
  return report;
}

Report CmdExperimentCycles(const CyclesArgs& args) {
  if (args.trials < 100) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 100 trials");
  }
  if (args.n_list.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty candidate-count list");
  }
  Report report("experiment-cycles", "Frequency of no Condorcet winner");
  report.Field("voters", std::to_string(args.m));
  report.Field("trials", std::to_string(args.trials));
  report.Field("seed", std::to_string(args.seed));
  Json& data = report.data();
  data["voters"] = args.m;
  data["trials"] = args.trials;
  data["seed"] = args.seed;
  Table& table = report.AddTable(
      "frequency", {"candidates", "voters", "trials", "no winner",
                    "frequency", "std error", "exact"});
  Json rows = Json::array();
  for (int n : args.n_list) {
    const CycleFrequency f =
        EstimateNoCondorcetWinner(n, args.m, args.trials, args.seed, args.jobs);
    std::optional<Rational> exact;
    if (SpaceSize(ExhaustiveComplete{n, args.m}) <= kExactEnumerationLimit) {
      exact = ExactNoCondorcetWinner(n, args.m);
    }
    table.rows.push_back(
        {std::to_string(n), std::to_string(args.m), std::to_string(f.trials),
         std::to_string(f.without_winner), FormatDouble(f.frequency()),
         FormatDouble(f.standard_error()),
         exact ? ToString(*exact) + " = " + FormatDouble(ToDouble(*exact))
               : "-"});
    Json row;
    row["candidates"] = n;
    row["voters"] = args.m;
    row["trials"] = f.trials;
    row["without_winner"] = f.without_winner;
    row["frequency"] = Num(f.frequency());
    row["standard_error"] = Num(f.standard_error());
    row["exact"] = exact ? RationalJson(*exact) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  data["rows"] = std::move(rows);
  return report;
}

namespace {

Report DemoParadox() {
  Report report("demo", "Condorcet paradox");
  const PreferenceProfile profile =
      PreferenceProfile::FromRankings(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const CandidateSet& names = profile.candidates();
  const PairwiseTally tally = Tally(profile);
  report.data()["profile"] = ProfileJson(profile);
  AddBallots(report, profile);
  AddPairs(report, tally, names);
  AddMajority(report, tally, names);

  const RuleOutput borda = RuleUnderTest(RuleId::kBorda).Apply(profile);
  const RuleOutput mle = RuleUnderTest(RuleId::kMleStandard).Apply(profile);
  report.Field("borda ranking", FormatRanking(borda.ranking, names));
  report.Field("mle-standard ranking", FormatRanking(mle.ranking, names));
  AddRuleOutput(report, mle, names, "mle-standard");

  const BtEmbedding embedding = EmbedBradleyTerry(tally);
  report.Field("log-odds residual", FormatDouble(embedding.residual));
  report.data()["log_odds_residual"] = Num(embedding.residual);
  report.data()["log_odds_residual_over_log2"] =
      Num(embedding.residual / std::log(2.0));

  const ResponseDistribution gpmd = Gpmd(profile, EpsilonPolicy::Limit());
  AddDistribution(report, "gpmd-limit", gpmd, FirstPlaceShares(profile),
                  names);
  report.Note("The majority relation is cyclic, so no ranking respects every "
              "pairwise majority. The tally is not realizable by any reward "
              "vector: the log-odds around the cycle sum to 3 log 2 instead "
              "of zero. All three candidates get equal rewards and equal "
              "probability.");
  return report;
}

Report DemoSingleVoterCycle() {
  Report report("demo", "Single labeler with cyclic comparisons");
  Voter voter{"v1", std::vector<PairPreference>{{0, 1}, {1, 2}, {2, 0}}};
  const PreferenceProfile profile(CandidateSet::Numbered(3), {voter});
  const CandidateSet& names = profile.candidates();
  report.data()["profile"] = ProfileJson(profile);
  AddBallots(report, profile);
  AddPairs(report, Tally(profile), names);

  const RuleUnderTest rule(RuleId::kMleStandard);
  const RuleOutput output = rule.Apply(profile);
  report.Field("mle-standard ranking", FormatRanking(output.ranking, names));
  AddRuleOutput(report, output, names, "mle-standard");
  const AxiomReport pareto =
      EvaluateAxiom(AxiomId::kPareto, profile, output, CheckOptions());
  AddAxiomTable(report, {pareto}, names);
  report.Note("Each pair is compared once, so every comparison is unanimous. "
              "The rewards come out equal and the ranking is a three-way tie, "
              "which breaks Pareto optimality on every pair.");
  return report;
}

Report DemoBordaVsCopeland(int jobs) {
  Report report("demo", "Borda against Copeland");
  const RuleUnderTest borda(RuleId::kBorda);
  const RuleUnderTest copeland(RuleId::kCopeland);
  SearchOptions options;
  options.jobs = jobs;
  // Want a profile where Borda does not put the Condorcet winner alone on top
  // but Copeland does. Borda fails Condorcet before Copeland ever could.
  for (int m = 3; m <= 5; ++m) {
    const SearchSpace space = ExhaustiveComplete{3, m};
    const SearchResult found =
        CounterexampleSearch(borda, AxiomId::kCondorcet, space, options);
    if (!found.counterexample) continue;
    const PreferenceProfile& profile = found.counterexample->profile;
    const CandidateSet& names = profile.candidates();
    report.Field("space", DescribeSpace(space));
    report.Field("index", std::to_string(found.counterexample->index));
    report.data()["space"] = DescribeSpace(space);
    report.data()["profile"] = ProfileJson(profile);
    AddBallots(report, profile);
    AddMajority(report, Tally(profile), names);
    const RuleOutput b = borda.Apply(profile);
    const RuleOutput c = copeland.Apply(profile);
    report.Field("borda ranking", FormatRanking(b.ranking, names));
    report.Field("copeland ranking", FormatRanking(c.ranking, names));
    AddRuleOutput(report, b, names, "borda");
    AddRuleOutput(report, c, names, "copeland");
    const AxiomReport copeland_report =
        EvaluateAxiom(AxiomId::kCondorcet, profile, c, CheckOptions());
    AddAxiomTable(report, {found.counterexample->report, copeland_report},
                  names);
    report.Note("The first row checks Borda, the second Copeland. The "
                "Condorcet winner beats each rival head to head but collects "
                "no more Borda points than a rival; Copeland counts only "
                "pairwise wins and puts it first.");
    return report;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no Borda Condorcet failure found with three candidates");
}

}  // namespace

Report CmdDemo(const std::string& name, int jobs) {
  if (name == "condorcet-paradox") return DemoParadox();
  if (name == "single-voter-cycle") return DemoSingleVoterCycle();
  if (name == "borda-vs-copeland") return DemoBordaVsCopeland(jobs);
  throw Error(ErrorCode::kInvalidArgument, "unknown demo '" + name + "'");
}

}  // namespace prefaxiom::cli

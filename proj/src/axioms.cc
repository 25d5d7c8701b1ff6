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

#include "prefaxiom/axioms.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

constexpr std::pair<AxiomId, std::string_view> kAxiomNames[] = {
    {AxiomId::kPareto, "pareto"},
    {AxiomId::kMajority, "majority"},
    {AxiomId::kPairwiseMajority, "pairwise-majority"},
    {AxiomId::kCondorcet, "condorcet"},
    {AxiomId::kPreferenceMatching, "preference-matching"},
    {AxiomId::kPreferenceEquivalence, "preference-equivalence"},
    {AxiomId::kGroupPreferenceMatching, "group-preference-matching"},
};

constexpr std::pair<RuleId, std::string_view> kRuleNames[] = {
    {RuleId::kBorda, "borda"},
    {RuleId::kCopeland, "copeland"},
    {RuleId::kMleStandard, "mle-standard"},
    {RuleId::kMleCopeland, "mle-copeland"},
    {RuleId::kMleGpm, "mle-gpm"},
    {RuleId::kGpmdLimit, "gpmd-limit"},
};

void CheckSize(int n, int expected, const char* what) {
  if (n != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has " + std::to_string(n) +
                    " candidates, expected " + std::to_string(expected));
  }
}

AxiomReport Violation(AxiomId axiom, std::vector<int> candidates,
                      std::string detail,
                      std::optional<double> gap = std::nullopt) {
  return {axiom, true, false,
          Witness{std::move(candidates), gap, std::move(detail)}};
}

AxiomReport Holds(AxiomId axiom) { return {axiom, true, true, std::nullopt}; }

// The winner must be alone in the ranking's top tier.
AxiomReport RequireUniqueTop(AxiomId axiom, const Ranking& ranking, int winner,
                             const char* role) {
  const std::vector<int>& top = ranking.TopTier();
  if (top.size() == 1 && top.front() == winner) return Holds(axiom);
  std::vector<int> witness{winner};
  for (int c : top) {
    if (c != winner) witness.push_back(c);
  }
  return Violation(axiom, std::move(witness),
                   std::string(role) + " is not the unique top of the ranking");
}

}  // namespace

std::string_view AxiomName(AxiomId axiom) {
  for (const auto& [id, name] : kAxiomNames) {
    if (id == axiom) return name;
  }
  return "unknown";
}

std::optional<AxiomId> ParseAxiomName(std::string_view name) {
  if (name == "gpm") return AxiomId::kGroupPreferenceMatching;
  for (const auto& [id, n] : kAxiomNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

bool IsOrdinal(AxiomId axiom) {
  return std::find(std::begin(kOrdinalAxioms), std::end(kOrdinalAxioms),
                   axiom) != std::end(kOrdinalAxioms);
}

std::string_view RuleName(RuleId rule) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == rule) return name;
  }
  return "unknown";
}

std::optional<RuleId> ParseRuleName(std::string_view name) {
  for (const auto& [id, n] : kRuleNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

AxiomReport CheckPareto(const PreferenceProfile& profile,
                        const Ranking& ranking) {
  const int n = profile.num_candidates();
  CheckSize(ranking.size(), n, "ranking");
  PairwiseTally tally = Tally(profile);
  bool applicable = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!tally.Defined(i, j) || tally.wins(j, i) != 0) continue;
      applicable = true;
      if (!ranking.Prefers(i, j)) {
        return Violation(AxiomId::kPareto, {i, j},
                         "every comparison prefers the first candidate but "
                         "the ranking does not place it strictly above");
      }
    }
  }
  return applicable ? Holds(AxiomId::kPareto)
                    : AxiomReport::Vacuous(AxiomId::kPareto);
}

AxiomReport CheckMajority(const PreferenceProfile& profile,
                          const Ranking& ranking) {
  CheckSize(ranking.size(), profile.num_candidates(), "ranking");
  if (!profile.IsComplete()) return AxiomReport::Vacuous(AxiomId::kMajority);
  std::optional<int> winner = MajorityWinner(profile);
  if (!winner) return AxiomReport::Vacuous(AxiomId::kMajority);
  return RequireUniqueTop(AxiomId::kMajority, ranking, *winner,
                          "majority winner");
}

AxiomReport CheckPairwiseMajority(const PairwiseTally& tally,
                                  const Ranking& ranking) {
  CheckSize(ranking.size(), tally.size(), "ranking");
  std::optional<Ranking> target = PairwiseMajorityRanking(tally);
  if (!target) return AxiomReport::Vacuous(AxiomId::kPairwiseMajority);
  if (ranking == *target) return Holds(AxiomId::kPairwiseMajority);
  const std::vector<int> order = target->Order();
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    const int c = order[pos];
    if (ranking.TierOf(c) != pos || ranking.tiers()[pos].size() != 1) {
      return Violation(AxiomId::kPairwiseMajority, {c},
                       "candidate at majority position " +
                           std::to_string(pos + 1) +
                           " is misplaced or tied in the ranking");
    }
  }
  return Violation(AxiomId::kPairwiseMajority, {}, "ranking differs");
}

AxiomReport CheckCondorcet(const PairwiseTally& tally, const Ranking& ranking) {
  CheckSize(ranking.size(), tally.size(), "ranking");
  std::optional<int> winner = CondorcetWinner(tally);
  if (!winner) return AxiomReport::Vacuous(AxiomId::kCondorcet);
  return RequireUniqueTop(AxiomId::kCondorcet, ranking, *winner,
                          "Condorcet winner");
}

BtEmbedding EmbedBradleyTerry(const PairwiseTally& tally) {
  tally.RequireAllPairs();
  const int n = tally.size();
  BtEmbedding result;
  std::vector<std::vector<double>> log_odds(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational p = tally.Prop(i, j);
      if (p == 0 || p == 1) {
        result.boundary = true;
        result.worst_pair = {i, j};
        return result;
      }
      const double s = std::log(ToDouble(p / (1 - p)));
      log_odds[i][j] = s;
      log_odds[j][i] = -s;
    }
  }
  std::vector<double> r(n, 0.0);
  for (int i = 1; i < n; ++i) r[i] = log_odds[i][0];
  const double mean = std::accumulate(r.begin(), r.end(), 0.0) / n;
  for (double& v : r) v -= mean;
  result.residual = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::abs(log_odds[i][j] - (r[i] - r[j]));
      if (gap > result.residual) {
        result.residual = gap;
        result.worst_pair = {i, j};
      }
    }
  }
  result.rewards = std::move(r);
  return result;
}

std::optional<RewardVector> BtEmbeddable(const PairwiseTally& tally,
                                         double tol) {
  BtEmbedding embedding = EmbedBradleyTerry(tally);
  if (embedding.boundary || embedding.residual > tol) return std::nullopt;
  return RewardVector{std::move(embedding.rewards),
                      Converged{embedding.residual, 0}};
}

AxiomReport CheckPreferenceMatching(const PairwiseTally& tally,
                                    const ResponseDistribution& dist,
                                    double tol) {
  CheckSize(dist.size(), tally.size(), "distribution");
  if (!BtEmbeddable(tally, tol)) {
    return AxiomReport::Vacuous(AxiomId::kPreferenceMatching);
  }
  const int n = tally.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double mass = dist[i] + dist[j];
      const double target = ToDouble(tally.Prop(i, j));
      const double gap = mass > 0.0
                             ? std::abs(dist[i] / mass - target)
                             : std::numeric_limits<double>::infinity();
      if (gap > tol) {
        return Violation(AxiomId::kPreferenceMatching, {i, j},
                         "p_i / (p_i + p_j) does not match P(y_i > y_j)", gap);
      }
    }
  }
  return Holds(AxiomId::kPreferenceMatching);
}

namespace {

void RequireCompleteProfile(const PreferenceProfile& profile) {
  if (!profile.IsComplete()) {
    throw Error(ErrorCode::kNotCompleteProfile,
                "equal preference is defined on complete profiles");
  }
}

// Backtracking search for a relabeling that maps the profile onto itself.
// Candidates may only map to candidates with the same histogram of ballot
// positions, and every partial assignment must preserve the tally.
class SymmetrySearch {
 public:
  explicit SymmetrySearch(const PreferenceProfile& profile)
      : profile_(profile),
        n_(profile.num_candidates()),
        tally_(Tally(profile)),
        positions_(n_, std::vector<int>(n_, 0)) {
    for (const Voter& voter : profile.voters()) {
      const std::vector<int> order = voter.ranking().Order();
      for (int k = 0; k < n_; ++k) ++positions_[order[k]][k];
    }
  }

  std::optional<std::vector<int>> Find(int i, int j) {
    if (positions_[i] != positions_[j]) return std::nullopt;
    perm_.assign(n_, -1);
    used_.assign(n_, false);
    perm_[i] = j;
    used_[j] = true;
    if (Extend(0)) return perm_;
    return std::nullopt;
  }

 private:
  bool Consistent(int c) const {
    for (int a = 0; a < n_; ++a) {
      if (a == c || perm_[a] < 0) continue;
      if (tally_.wins(c, a) != tally_.wins(perm_[c], perm_[a]) ||
          tally_.wins(a, c) != tally_.wins(perm_[a], perm_[c])) {
        return false;
      }
    }
    return true;
  }

  bool Extend(int c) {
    if (c == n_) {
      return ProfilesEqualAsMultisets(ApplyPermutation(profile_, perm_),
                                      profile_);
    }
    if (perm_[c] >= 0) return Consistent(c) && Extend(c + 1);
    for (int t = 0; t < n_; ++t) {
      if (used_[t] || positions_[c] != positions_[t]) continue;
      perm_[c] = t;
      used_[t] = true;
      if (Consistent(c) && Extend(c + 1)) return true;
      perm_[c] = -1;
      used_[t] = false;
    }
    return false;
  }

  const PreferenceProfile& profile_;
  int n_;
  PairwiseTally tally_;
  std::vector<std::vector<int>> positions_;
  std::vector<int> perm_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> FindSymmetry(const PreferenceProfile& profile,
                                             int i, int j) {
  RequireCompleteProfile(profile);
  const int n = profile.num_candidates();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw Error(ErrorCode::kInvalidArgument, "candidate index out of range");
  }
  return SymmetrySearch(profile).Find(i, j);
}

bool EquallyPreferred(const PreferenceProfile& profile, int i, int j) {
  return FindSymmetry(profile, i, j).has_value();
}

std::vector<int> PreferenceClasses(const PreferenceProfile& profile) {
  RequireCompleteProfile(profile);
  const int n = profile.num_candidates();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  const auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  SymmetrySearch search(profile);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      if (const auto perm = search.Find(i, j)) {
        for (int c = 0; c < n; ++c) unite(c, (*perm)[c]);
      }
    }
  }
  std::vector<int> classes(n);
  for (int c = 0; c < n; ++c) classes[c] = find(c);
  return classes;
}

std::optional<std::vector<int>> FindEquivalenceMapping(
    const PreferenceProfile& a, const PreferenceProfile& b) {
  if (a.num_candidates() != b.num_candidates() ||
      a.num_voters() != b.num_voters()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profiles differ in candidate or voter count");
  }
  std::vector<int> perm(a.num_candidates());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (ProfilesEqualAsMultisets(ApplyPermutation(a, perm), b)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

AxiomReport CheckPreferenceEquivalence(const PreferenceProfile& profile,
                                       const ResponseDistribution& dist,
                                       double tol) {
  const int n = profile.num_candidates();
  CheckSize(dist.size(), n, "distribution");
  const std::vector<int> classes = PreferenceClasses(profile);
  bool applicable = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (classes[i] != classes[j]) continue;
      applicable = true;
      const double gap = std::abs(dist[i] - dist[j]);
      if (gap > tol) {
        return Violation(AxiomId::kPreferenceEquivalence, {i, j},
                         "equally preferred candidates get different "
                         "probabilities",
                         gap);
      }
    }
  }
  return applicable ? Holds(AxiomId::kPreferenceEquivalence)
                    : AxiomReport::Vacuous(AxiomId::kPreferenceEquivalence);
}

AxiomReport CheckGroupPreferenceMatching(const PreferenceProfile& profile,
                                         const ResponseDistribution& dist,
                                         const EpsilonPolicy& policy,
                                         double tol) {
  CheckSize(dist.size(), profile.num_candidates(), "distribution");
  const ResponseDistribution target = Gpmd(profile, policy);
  int worst = 0;
  double gap = 0.0;
  for (int i = 0; i < dist.size(); ++i) {
    const double d = std::abs(dist[i] - target[i]);
    if (d > gap) {
      gap = d;
      worst = i;
    }
  }
  if (gap > tol) {
    return Violation(AxiomId::kGroupPreferenceMatching, {worst},
                     "distribution differs from the group preference "
                     "matching distribution",
                     gap);
  }
  return Holds(AxiomId::kGroupPreferenceMatching);
}

bool RuleUnderTest::ProducesDistribution() const {
  return id_ != RuleId::kBorda && id_ != RuleId::kCopeland;
}

RuleOutput RuleUnderTest::Apply(const PreferenceProfile& profile,
                                bool want_distribution) const {
  const RankingTiePolicy ties = options_.ranking_ties;
  switch (id_) {
    case RuleId::kBorda: {
      ScoreVector scores = BordaScores(Tally(profile));
      Ranking ranking = RankingFromScores(scores, ties);
      return {std::move(ranking), std::move(scores), std::nullopt, std::nullopt};
    }
    case RuleId::kCopeland: {
      ScoreVector scores =
          CopelandScores(Tally(profile), options_.majority_ties);
      Ranking ranking = RankingFromScores(scores, ties);
      return {std::move(ranking), std::move(scores), std::nullopt, std::nullopt};
    }
    case RuleId::kGpmdLimit: {
      const std::vector<Rational> shares = FirstPlaceShares(profile);
      ScoreVector scores{shares, ScoreRule::kGeneralScore};
      return {RankingFromScores(shares, ties), std::move(scores), std::nullopt,
              ResponseDistribution::FromRationals(shares)};
    }
    case RuleId::kMleStandard:
    case RuleId::kMleCopeland:
    case RuleId::kMleGpm:
      break;
  }

  const PairwiseTally tally = Tally(profile);
  std::optional<WeightMatrix> weights;
  if (id_ == RuleId::kMleStandard) {
    weights.emplace(StandardWeights(tally));
  } else if (id_ == RuleId::kMleCopeland) {
    weights.emplace(CopelandWeights(tally, options_.majority_ties));
  } else {
    weights.emplace(GpmWeights(Gpmd(profile, options_.epsilon)));
  }

  RuleOutput output;
  const bool exact = weights->constant_total().has_value();
  if (exact) {
    output.scores = Scores(*weights);
    output.ranking = RankingFromScores(*output.scores, ties);
  }
  if (want_distribution || !exact) {
    output.rewards = SolveMle(*weights, options_.solver);
    if (output.rewards->converged()) {
      output.distribution = Softmax(*output.rewards);
    }
    if (!exact) {
      if (!output.rewards->converged()) {
        throw Error(ErrorCode::kNotConverged,
                    "pair totals differ and the solve has no finite optimum; "
                    "no ranking is available");
      }
      output.ranking = RankingFromValues(output.rewards->r, 1e-8, ties);
    }
  }
  return output;
}

AxiomReport EvaluateAxiom(AxiomId axiom, const PreferenceProfile& profile,
                          const RuleOutput& output,
                          const CheckOptions& options) {
  switch (axiom) {
    case AxiomId::kPareto:
      return CheckPareto(profile, output.ranking);
    case AxiomId::kMajority:
      return CheckMajority(profile, output.ranking);
    case AxiomId::kPairwiseMajority:
      return CheckPairwiseMajority(Tally(profile), output.ranking);
    case AxiomId::kCondorcet:
      return CheckCondorcet(Tally(profile), output.ranking);
    default:
      break;
  }
  if (!output.distribution) return AxiomReport::Vacuous(axiom);
  switch (axiom) {
    case AxiomId::kPreferenceMatching:
      return CheckPreferenceMatching(Tally(profile), *output.distribution,
                                     options.tol);
    case AxiomId::kPreferenceEquivalence:
      if (!profile.IsComplete()) return AxiomReport::Vacuous(axiom);
      return CheckPreferenceEquivalence(profile, *output.distribution,
                                        options.tol);
    case AxiomId::kGroupPreferenceMatching:
      if (!profile.IsComplete()) return AxiomReport::Vacuous(axiom);
      return CheckGroupPreferenceMatching(profile, *output.distribution,
                                          options.gpm_policy, options.tol);
    default:
      break;
  }
  return AxiomReport::Vacuous(axiom);
}

AxiomReport EvaluateAxiom(const RuleUnderTest& rule, AxiomId axiom,
                          const PreferenceProfile& profile,
                          const CheckOptions& options) {
  const bool ordinal = IsOrdinal(axiom);
  if (!ordinal && !rule.ProducesDistribution()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(rule.name()) + " has no distributional output for " +
                    std::string(AxiomName(axiom)));
  }
  return EvaluateAxiom(axiom, profile, rule.Apply(profile, !ordinal), options);
}

}  // namespace prefaxiom

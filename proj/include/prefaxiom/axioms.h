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

// Executable checks of aggregation axioms, and the registry of aggregation
// rules they are run against.
//
// Every checker reports whether its premise held (applicable) and whether
// the rule's output honoured it; a check whose premise fails is vacuously
// satisfied.

#ifndef PREFAXIOM_AXIOMS_H_
#define PREFAXIOM_AXIOMS_H_

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefaxiom/gpmd.h"
#include "prefaxiom/profile.h"
#include "prefaxiom/reward.h"
#include "prefaxiom/rules.h"

namespace prefaxiom {

enum class AxiomId {
  kPareto,
  kMajority,
  kPairwiseMajority,
  kCondorcet,
  kPreferenceMatching,
  kPreferenceEquivalence,
  kGroupPreferenceMatching,
};

inline constexpr AxiomId kOrdinalAxioms[] = {
    AxiomId::kPareto, AxiomId::kMajority, AxiomId::kPairwiseMajority,
    AxiomId::kCondorcet};
inline constexpr AxiomId kAllAxioms[] = {
    AxiomId::kPareto,
    AxiomId::kMajority,
    AxiomId::kPairwiseMajority,
    AxiomId::kCondorcet,
    AxiomId::kPreferenceMatching,
    AxiomId::kPreferenceEquivalence,
    AxiomId::kGroupPreferenceMatching};

std::string_view AxiomName(AxiomId axiom);
std::optional<AxiomId> ParseAxiomName(std::string_view name);
bool IsOrdinal(AxiomId axiom);

struct Witness {
  std::vector<int> candidates;
  std::optional<double> gap;
  std::string detail;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::kPareto;
  bool applicable = false;
  bool satisfied = true;
  std::optional<Witness> witness;

  static AxiomReport Vacuous(AxiomId axiom) { return {axiom, false, true, {}}; }
  bool violated() const { return !satisfied; }
};

// Every unanimous pair (P = 1) must be strictly ordered the same way.
AxiomReport CheckPareto(const PreferenceProfile& profile,
                        const Ranking& ranking);

// A majority winner must be the unique top. Not applicable to profiles with
// comparison-set voters, where first places are ill-defined.
AxiomReport CheckMajority(const PreferenceProfile& profile,
                          const Ranking& ranking);

// If the majority relation is a strict linear order, the ranking must equal
// it exactly; tied classes fail.
AxiomReport CheckPairwiseMajority(const PairwiseTally& tally,
                                  const Ranking& ranking);

// A Condorcet winner must be the unique top.
AxiomReport CheckCondorcet(const PairwiseTally& tally, const Ranking& ranking);

// Log-odds reconstruction of a reward vector from a tally: with
// s_ij = log(P_ij / P_ji), r_i = s_i0 re-centred to sum zero.
struct BtEmbedding {
  // Sum-zero rewards; empty when some proportion is 0 or 1.
  std::vector<double> rewards;
  // max_{i,j} |s_ij - (r_i - r_j)|; +inf on boundary proportions.
  double residual = std::numeric_limits<double>::infinity();
  // Pair attaining the residual, or the first boundary pair.
  std::pair<int, int> worst_pair{0, 0};
  bool boundary = false;
};

// Requires every pair (kUndefinedPair).
BtEmbedding EmbedBradleyTerry(const PairwiseTally& tally);

// Rewards realizing the tally within `tol`, if any.
std::optional<RewardVector> BtEmbeddable(const PairwiseTally& tally,
                                         double tol);

// Applicable iff the tally is embeddable within `tol`; satisfied iff
// p_i / (p_i + p_j) matches P_ij within `tol` on every pair.
AxiomReport CheckPreferenceMatching(const PairwiseTally& tally,
                                    const ResponseDistribution& dist,
                                    double tol = 1e-6);

// A relabeling of candidates sending i to j that maps the multiset of
// ballots onto itself, if one exists. Throws kNotCompleteProfile.
std::optional<std::vector<int>> FindSymmetry(const PreferenceProfile& profile,
                                             int i, int j);

// y_i and y_j are exchangeable: some symmetry of the profile sends one to
// the other. A plain swap is the simplest case; the Condorcet paradox needs
// a rotation.
bool EquallyPreferred(const PreferenceProfile& profile, int i, int j);

// Class label per candidate (the smallest index in its class) under the
// equally-preferred relation.
std::vector<int> PreferenceClasses(const PreferenceProfile& profile);

// Some relabeling of candidates maps profile `a` onto `b` as multisets.
// Exhaustive over permutations; meant for small n.
std::optional<std::vector<int>> FindEquivalenceMapping(
    const PreferenceProfile& a, const PreferenceProfile& b);

// Equally preferred candidates must receive probabilities within `tol`.
AxiomReport CheckPreferenceEquivalence(const PreferenceProfile& profile,
                                       const ResponseDistribution& dist,
                                       double tol = 1e-6);

// The distribution must be within `tol` (max norm) of Gpmd(profile, policy).
AxiomReport CheckGroupPreferenceMatching(const PreferenceProfile& profile,
                                         const ResponseDistribution& dist,
                                         const EpsilonPolicy& policy,
                                         double tol = 1e-6);

enum class RuleId {
  kBorda,
  kCopeland,
  kMleStandard,
  kMleCopeland,
  kMleGpm,
  kGpmdLimit,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::kBorda,       RuleId::kCopeland, RuleId::kMleStandard,
    RuleId::kMleCopeland, RuleId::kMleGpm,   RuleId::kGpmdLimit};

std::string_view RuleName(RuleId rule);
std::optional<RuleId> ParseRuleName(std::string_view name);

struct RuleOptions {
  MajorityTiePolicy majority_ties = MajorityTiePolicy::kHalfPoint;
  RankingTiePolicy ranking_ties = RankingTiePolicy::kGroupTies;
  // Target used by mle-gpm.
  EpsilonPolicy epsilon = EpsilonPolicy::Finite(1e-3);
  SolverConfig solver;
};

struct RuleOutput {
  Ranking ranking;
  std::optional<ScoreVector> scores;
  // Present for MLE rules when a solve was requested.
  std::optional<RewardVector> rewards;
  // Present when the rule yields a finite distribution.
  std::optional<ResponseDistribution> distribution;
};

// A named aggregation rule. Ordinal output always comes from exact scores;
// MLE rules additionally solve for rewards when a distribution is requested.
class RuleUnderTest {
 public:
  explicit RuleUnderTest(RuleId id, RuleOptions options = RuleOptions())
      : id_(id), options_(std::move(options)) {}

  RuleId id() const { return id_; }
  std::string_view name() const { return RuleName(id_); }
  const RuleOptions& options() const { return options_; }
  // Borda and Copeland only produce rankings.
  bool ProducesDistribution() const;

  RuleOutput Apply(const PreferenceProfile& profile,
                   bool want_distribution = true) const;

 private:
  RuleId id_;
  RuleOptions options_;
};

// Runs one checker against the rule's output on `profile`. Distribution
// checks are reported as not applicable when the rule's solve has no finite
// minimizer; they throw kInvalidArgument for rules without distributions.
struct CheckOptions {
  double tol = 1e-6;
  EpsilonPolicy gpm_policy = EpsilonPolicy::Limit();
};
AxiomReport EvaluateAxiom(const RuleUnderTest& rule, AxiomId axiom,
                          const PreferenceProfile& profile,
                          const CheckOptions& options = CheckOptions());
AxiomReport EvaluateAxiom(AxiomId axiom, const PreferenceProfile& profile,
                          const RuleOutput& output,
                          const CheckOptions& options = CheckOptions());

}  // namespace prefaxiom

#endif  // PREFAXIOM_AXIOMS_H_

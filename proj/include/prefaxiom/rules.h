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

#ifndef PREFAXIOM_RULES_H_
#define PREFAXIOM_RULES_H_

#include <optional>
#include <vector>

#include "prefaxiom/profile.h"
#include "prefaxiom/rational.h"

namespace prefaxiom {

enum class ScoreRule { kBorda, kCopeland, kGeneralScore };

struct ScoreVector {
  std::vector<Rational> values;
  ScoreRule rule = ScoreRule::kGeneralScore;

  int size() const { return static_cast<int>(values.size()); }
  std::vector<double> ToDoubles() const;
};

enum class RankingTiePolicy {
  // Equal scores share one indifference class.
  kGroupTies,
  // Equal scores are ordered by candidate index.
  kLexicographic,
};

// BC_i = sum_{k != i} P(y_i > y_k), unnormalized. Requires every pair.
ScoreVector BordaScores(const PairwiseTally& tally);

// Number of strict pairwise majority wins, plus 1/2 per exact tie under
// kHalfPoint. Requires every pair.
ScoreVector CopelandScores(
    const PairwiseTally& tally,
    MajorityTiePolicy policy = MajorityTiePolicy::kHalfPoint);

std::optional<int> CondorcetWinner(const PairwiseTally& tally);

// Candidate ranked first by more than half the voters. Throws
// kNotCompleteProfile for profiles containing comparison-set voters.
std::optional<int> MajorityWinner(const PreferenceProfile& profile);

// The strict order agreeing with every pairwise majority, if the majority
// relation is a strict linear order.
std::optional<Ranking> PairwiseMajorityRanking(const PairwiseTally& tally);

// Descending by score.
Ranking RankingFromScores(
    const std::vector<Rational>& scores,
    RankingTiePolicy policy = RankingTiePolicy::kGroupTies);
inline Ranking RankingFromScores(
    const ScoreVector& scores,
    RankingTiePolicy policy = RankingTiePolicy::kGroupTies) {
  return RankingFromScores(scores.values, policy);
}

// Descending by value; values within `tie_tolerance` of the previous member
// of a class join it.
Ranking RankingFromValues(const std::vector<double>& values,
                          double tie_tolerance,
                          RankingTiePolicy policy = RankingTiePolicy::kGroupTies);

// Share of voters ranking each candidate first. Throws kNotCompleteProfile.
std::vector<Rational> FirstPlaceShares(const PreferenceProfile& profile);

}  // namespace prefaxiom

#endif  // PREFAXIOM_RULES_H_

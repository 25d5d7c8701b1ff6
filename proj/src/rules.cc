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

#include "prefaxiom/rules.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

template <typename T, typename Greater, typename Same>
Ranking RankDescending(const std::vector<T>& values, RankingTiePolicy policy,
                       Greater greater, Same same) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return greater(values[a], values[b]);
  });
  std::vector<std::vector<int>> tiers;
  for (int c : order) {
    if (policy == RankingTiePolicy::kGroupTies && !tiers.empty() &&
        same(values[tiers.back().back()], values[c])) {
      tiers.back().push_back(c);
    } else {
      tiers.push_back({c});
    }
  }
  for (auto& tier : tiers) std::sort(tier.begin(), tier.end());
  return Ranking::FromTiers(std::move(tiers));
}

void RequireComplete(const PreferenceProfile& profile) {
  if (!profile.IsComplete()) {
    throw Error(ErrorCode::kNotCompleteProfile,
                "operation needs every voter to hold a strict ranking");
  }
}

}  // namespace

std::vector<double> ScoreVector::ToDoubles() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(ToDouble(v));
  return out;
}

ScoreVector BordaScores(const PairwiseTally& tally) {
  tally.RequireAllPairs();
  const int n = tally.size();
  ScoreVector scores{std::vector<Rational>(n, Rational(0)), ScoreRule::kBorda};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k != i) scores.values[i] += tally.Prop(i, k);
    }
  }
  return scores;
}

ScoreVector CopelandScores(const PairwiseTally& tally,
                           MajorityTiePolicy policy) {
  tally.RequireAllPairs();
  MajorityRelation relation = ComputeMajorityRelation(tally, policy);
  const int n = tally.size();
  ScoreVector scores{std::vector<Rational>(n, Rational(0)),
                     ScoreRule::kCopeland};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Duel d = relation.at(i, k);
      if (d == Duel::kWin) {
        scores.values[i] += 1;
      } else if (d == Duel::kTie) {
        scores.values[i] += Rational(1, 2);
      }
    }
  }
  return scores;
}

std::optional<int> CondorcetWinner(const PairwiseTally& tally) {
  tally.RequireAllPairs();
  const Rational half(1, 2);
  const int n = tally.size();
  for (int c = 0; c < n; ++c) {
    bool beats_all = true;
    for (int k = 0; k < n && beats_all; ++k) {
      if (k != c && tally.Prop(c, k) <= half) beats_all = false;
    }
    if (beats_all) return c;
  }
  return std::nullopt;
}

std::optional<int> MajorityWinner(const PreferenceProfile& profile) {
  RequireComplete(profile);
  std::vector<int> firsts(profile.num_candidates(), 0);
  for (const Voter& voter : profile.voters()) {
    ++firsts[voter.ranking().TopTier().front()];
  }
  for (int c = 0; c < profile.num_candidates(); ++c) {
    if (2 * firsts[c] > profile.num_voters()) return c;
  }
  return std::nullopt;
}

std::optional<Ranking> PairwiseMajorityRanking(const PairwiseTally& tally) {
  tally.RequireAllPairs();
  MajorityRelation relation = ComputeMajorityRelation(tally);
  const int n = tally.size();
  // A complete strict relation is a linear order iff the win counts are
  // exactly {0, 1, ..., n-1}.
  std::vector<int> wins(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Duel d = relation.at(i, k);
      if (d == Duel::kTie) return std::nullopt;
      if (d == Duel::kWin) ++wins[i];
    }
  }
  std::vector<int> order(n, -1);
  for (int i = 0; i < n; ++i) {
    int slot = n - 1 - wins[i];
    if (order[slot] != -1) return std::nullopt;
    order[slot] = i;
  }
  return Ranking::Strict(std::move(order));
}

Ranking RankingFromScores(const std::vector<Rational>& scores,
                          RankingTiePolicy policy) {
  return RankDescending(
      scores, policy,
      [](const Rational& a, const Rational& b) { return a > b; },
      [](const Rational& a, const Rational& b) { return a == b; });
}

Ranking RankingFromValues(const std::vector<double>& values,
                          double tie_tolerance, RankingTiePolicy policy) {
  return RankDescending(
      values, policy, [](double a, double b) { return a > b; },
      [tie_tolerance](double a, double b) {
        return std::abs(a - b) <= tie_tolerance;
      });
}

std::vector<Rational> FirstPlaceShares(const PreferenceProfile& profile) {
  RequireComplete(profile);
  std::vector<Rational> shares(profile.num_candidates(), Rational(0));
  const Rational unit(1, profile.num_voters());
  for (const Voter& voter : profile.voters()) {
    shares[voter.ranking().TopTier().front()] += unit;
  }
  return shares;
}

}  // namespace prefaxiom

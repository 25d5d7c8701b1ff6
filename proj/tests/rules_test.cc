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

#include <gtest/gtest.h>

#include "oracles.h"
#include "prefaxiom/profile_io.h"
#include "test_util.h"

namespace prefaxiom {
namespace {

using testing::FixturePath;
using testing::OrdersOf;

TEST(Borda, KnownValues) {
  const ScoreVector paradox =
      BordaScores(Tally(LoadProfile(FixturePath("paradox.json"))));
  EXPECT_EQ(paradox.values, (std::vector<Rational>{1, 1, 1}));
  const ScoreVector four =
      BordaScores(Tally(LoadProfile(FixturePath("four_voter.json"))));
  EXPECT_EQ(four.values, (std::vector<Rational>{Rational(5, 4), 1,
                                                Rational(3, 4)}));
  EXPECT_EQ(four.rule, ScoreRule::kBorda);
}

TEST(Borda, OrderingMatchesPositionalCount) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int m = 1 + static_cast<int>(seed % 9);
    const PreferenceProfile p = GenerateComplete(n, m, seed);
    const Ranking ranking = RankingFromScores(BordaScores(Tally(p)));
    EXPECT_EQ(ranking.tiers(),
              oracle::GroupDescending(oracle::PositionalBorda(OrdersOf(p), n)));
  }
}

TEST(Borda, RequiresEveryPair) {
  Voter v{"l", std::vector<PairPreference>{{0, 1}}};
  EXPECT_ERROR_CODE(
      BordaScores(Tally(PreferenceProfile(CandidateSet::Numbered(3), {v}))),
      ErrorCode::kUndefinedPair);
}

TEST(Copeland, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int m = 1 + static_cast<int>(seed % 6);
    const PreferenceProfile p = GenerateComplete(n, m, seed + 1000);
    const std::vector<long> doubled =
        oracle::DoubledCopeland(oracle::CountWins(OrdersOf(p), n));
    const ScoreVector s = CopelandScores(Tally(p));
    for (int i = 0; i < n; ++i) EXPECT_EQ(s.values[i] * 2, doubled[i]);
  }
}

TEST(Copeland, StrictPolicyRejectsTies) {
  const PairwiseTally t =
      Tally(PreferenceProfile::FromRankings(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(CopelandScores(t).values, (std::vector<Rational>{Rational(1, 2),
                                                             Rational(1, 2)}));
  EXPECT_ERROR_CODE(CopelandScores(t, MajorityTiePolicy::kStrictOnly),
                    ErrorCode::kUnexpectedTie);
}

TEST(CondorcetWinner, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int m = 1 + static_cast<int>(seed % 6);
    const PreferenceProfile p = GenerateComplete(n, m, seed + 77);
    EXPECT_EQ(CondorcetWinner(Tally(p)),
              oracle::CondorcetWinner(oracle::CountWins(OrdersOf(p), n)));
  }
}

TEST(PairwiseMajorityRanking, MatchesPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int m = 1 + 2 * static_cast<int>(seed % 3);
    const PreferenceProfile p = GenerateComplete(n, m, seed + 5);
    const auto expected =
        oracle::MajorityOrder(oracle::CountWins(OrdersOf(p), n));
    const auto actual = PairwiseMajorityRanking(Tally(p));
    ASSERT_EQ(actual.has_value(), expected.has_value());
    if (actual) {
      EXPECT_EQ(actual->Order(), *expected);
    }
  }
}

TEST(MajorityWinner, FirstPlaceMajority) {
  EXPECT_EQ(MajorityWinner(LoadProfile(FixturePath("two_candidates.json"))), 0);
  EXPECT_FALSE(MajorityWinner(LoadProfile(FixturePath("paradox.json"))));
  // Two of four is not a strict majority.
  EXPECT_FALSE(MajorityWinner(LoadProfile(FixturePath("four_voter.json"))));
  EXPECT_ERROR_CODE(
      MajorityWinner(LoadProfile(FixturePath("single_voter_cycle.json"))),
      ErrorCode::kNotCompleteProfile);
}

TEST(RankingFromScores, TiePolicies) {
  const std::vector<Rational> s{1, 3, 1, 2};
  EXPECT_EQ(RankingFromScores(s).tiers(),
            (std::vector<std::vector<int>>{{1}, {3}, {0, 2}}));
  EXPECT_EQ(RankingFromScores(s, RankingTiePolicy::kLexicographic).Order(),
            (std::vector<int>{1, 3, 0, 2}));
  EXPECT_TRUE(RankingFromScores(s, RankingTiePolicy::kLexicographic).IsStrict());
}

TEST(RankingFromValues, ToleranceGroupsNearTies) {
  const Ranking r = RankingFromValues({0.5, 0.5 + 1e-12, -1.0}, 1e-9);
  EXPECT_EQ(r.tiers(), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_EQ(RankingFromValues({0.5, 0.6, -1.0}, 1e-9).Order(),
            (std::vector<int>{1, 0, 2}));
}

TEST(FirstPlaceShares, CountsTops) {
  EXPECT_EQ(FirstPlaceShares(LoadProfile(FixturePath("four_voter.json"))),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 4),
                                   Rational(1, 4)}));
}

}  // namespace
}  // namespace prefaxiom

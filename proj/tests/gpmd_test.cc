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

#include "prefaxiom/gpmd.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "prefaxiom/axioms.h"
#include "prefaxiom/profile_io.h"
#include "test_util.h"

namespace prefaxiom {
namespace {

using testing::FixturePath;
using testing::OrdersOf;

TEST(EpsilonPolicy, Range) {
  EXPECT_ERROR_CODE(EpsilonPolicy::Finite(0.0), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(EpsilonPolicy::Finite(0.5), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(EpsilonPolicy::Limit().is_limit());
  EXPECT_DOUBLE_EQ(EpsilonPolicy::Finite(0.1).epsilon(), 0.1);
}

TEST(PmGeometric, QuarterEpsilon) {
  // c = 1/3: weights 1, 1/3, 1/9 normalize to 9/13, 3/13, 1/13.
  const ResponseDistribution p = PmGeometric(Ranking::Strict({0, 1, 2}), 0.25);
  EXPECT_NEAR(p[0], 9.0 / 13.0, 1e-15);
  EXPECT_NEAR(p[1], 3.0 / 13.0, 1e-15);
  EXPECT_NEAR(p[2], 1.0 / 13.0, 1e-15);
  EXPECT_ERROR_CODE(PmGeometric(Ranking::FromTiers({{0, 1}, {2}}), 0.25),
                    ErrorCode::kTiesNotAllowed);
}

TEST(PmGeometric, MatchesEveryPairwiseProportion) {
  // For a single ballot, p_a / (p_a + p_b) = 1 / (1 + c^(b-a)); adjacent
  // pairs are won with probability 1 - eps.
  const double eps = 0.1;
  const double c = eps / (1 - eps);
  const std::vector<int> order{3, 1, 0, 2};
  const ResponseDistribution p = PmGeometric(Ranking::Strict(order), eps);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      const double share = p[order[a]] / (p[order[a]] + p[order[b]]);
      EXPECT_NEAR(share, 1.0 / (1.0 + std::pow(c, b - a)), 1e-14);
    }
  }
  EXPECT_NEAR(p[3] / (p[3] + p[1]), 1 - eps, 1e-14);
}

TEST(Gpmd, LimitIsFirstPlaceShare) {
  const ResponseDistribution four =
      Gpmd(LoadProfile(FixturePath("four_voter.json")), EpsilonPolicy::Limit());
  EXPECT_EQ(four.values(), (std::vector<double>{0.5, 0.25, 0.25}));
  const ResponseDistribution paradox =
      Gpmd(LoadProfile(FixturePath("paradox.json")), EpsilonPolicy::Limit());
  for (double v : paradox.values()) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
  EXPECT_ERROR_CODE(Gpmd(LoadProfile(FixturePath("single_voter_cycle.json")),
                         EpsilonPolicy::Limit()),
                    ErrorCode::kNotCompleteProfile);
}

TEST(Gpmd, FiniteTendsToLimit) {
  const PreferenceProfile p = GenerateComplete(4, 7, 3);
  const ResponseDistribution limit = Gpmd(p, EpsilonPolicy::Limit());
  double previous = 1.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double gap = MaxAbsDifference(Gpmd(p, EpsilonPolicy::Finite(eps)), limit);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(Gpmd, FiniteIsVoterAverage) {
  const PreferenceProfile p = GenerateComplete(4, 5, 8);
  const double eps = 0.2;
  const double c = eps / (1 - eps);
  std::vector<double> expected(4, 0.0);
  for (const auto& order : OrdersOf(p)) {
    double z = 0.0;
    for (int k = 0; k < 4; ++k) z += std::pow(c, k);
    for (int k = 0; k < 4; ++k) expected[order[k]] += std::pow(c, k) / z / 5;
  }
  const ResponseDistribution got = Gpmd(p, EpsilonPolicy::Finite(eps));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], expected[k], 1e-14);
}

TEST(SmoothedTally, SingleVoterIsEmbeddable) {
  const PreferenceProfile p = PreferenceProfile::FromRankings(4, {{2, 0, 3, 1}});
  const std::vector<int> voters{0};
  const PairwiseTally t = SmoothedTally(p, voters, 0.05);
  EXPECT_NEAR(ToDouble(t.Prop(2, 0)), 0.95, 1e-15);
  const auto rewards = BtEmbeddable(t, 1e-9);
  ASSERT_TRUE(rewards.has_value());
  const ResponseDistribution q = SoftmaxValues(rewards->r);
  EXPECT_LT(MaxAbsDifference(q, PmGeometric(p.voter(0).ranking(), 0.05)), 1e-12);
}

TEST(LimitMatchingDistribution, TieredTally) {
  // A > B > C and B > A > C: A and B split, C is last in both.
  const PreferenceProfile p =
      PreferenceProfile::FromRankings(3, {{0, 1, 2}, {1, 0, 2}});
  const auto dist = LimitMatchingDistribution(Tally(p), 1e-9);
  ASSERT_TRUE(dist.has_value());
  EXPECT_NEAR((*dist)[0], 0.5, 1e-15);
  EXPECT_NEAR((*dist)[1], 0.5, 1e-15);
  EXPECT_EQ((*dist)[2], 0.0);
  EXPECT_FALSE(LimitMatchingDistribution(
                   Tally(LoadProfile(FixturePath("paradox.json"))), 1e-9)
                   .has_value());
}

TEST(Partition, Validation) {
  EXPECT_ERROR_CODE(Partition({{0}, {0, 1}}, 2), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(Partition({{0}}, 2), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(Partition({{0}, {}}, 1), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Partition::Singletons(3).num_blocks(), 3);
  EXPECT_EQ(Partition::OneBlock(3).num_blocks(), 1);
}

TEST(GpmdViaPartition, AgreesAcrossPartitions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PreferenceProfile p = GenerateComplete(3 + seed % 3, 2 + seed % 5, seed);
    const ResponseDistribution expected = Gpmd(p, EpsilonPolicy::Limit());
    for (const Partition& part :
         EnumerateEmbeddablePartitions(p, EpsilonPolicy::Limit())) {
      const PartitionGpmd got =
          GpmdViaPartition(p, part, EpsilonPolicy::Limit());
      EXPECT_LE(MaxAbsDifference(got.distribution, expected), 1e-12);
    }
  }
}

TEST(GpmdViaPartition, ReportsPooledDiscrepancy) {
  // A ballot and its reverse pool to the uniform tally, which is embeddable,
  // while their first places are A and C.
  const PreferenceProfile p =
      PreferenceProfile::FromRankings(3, {{0, 1, 2}, {2, 1, 0}});
  EXPECT_TRUE(BlockEmbeddable(p, std::vector<int>{0, 1}, EpsilonPolicy::Limit()));
  const PartitionGpmd got =
      GpmdViaPartition(p, Partition::OneBlock(2), EpsilonPolicy::Limit());
  EXPECT_EQ(got.distribution.values(), (std::vector<double>{0.5, 0.0, 0.5}));
  ASSERT_EQ(got.diagnostics.size(), 1u);
  EXPECT_NEAR(got.diagnostics[0].pooled_vs_member_gap, 1.0 / 3.0, 1e-12);

  // A paradox block has no tiered embedding.
  const PreferenceProfile cyclic = LoadProfile(FixturePath("paradox.json"));
  EXPECT_ERROR_CODE(
      GpmdViaPartition(cyclic, Partition::OneBlock(3), EpsilonPolicy::Limit()),
      ErrorCode::kBlockNotEmbeddable);

  const PreferenceProfile q =
      PreferenceProfile::FromRankings(3, {{0, 1, 2}, {1, 0, 2}});
  const PartitionGpmd tiered =
      GpmdViaPartition(q, Partition::OneBlock(2), EpsilonPolicy::Limit());
  ASSERT_EQ(tiered.diagnostics.size(), 1u);
  EXPECT_NEAR(tiered.diagnostics[0].pooled_vs_member_gap, 0.0, 1e-15);
}

TEST(EnumerateEmbeddablePartitions, StartsWithSingletonsAndDedups) {
  const PreferenceProfile p =
      PreferenceProfile::FromRankings(3, {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}});
  const auto parts = EnumerateEmbeddablePartitions(p, EpsilonPolicy::Limit());
  ASSERT_FALSE(parts.empty());
  EXPECT_EQ(parts.front(), Partition::Singletons(3));
  // All five set partitions of three identical-top voters qualify.
  EXPECT_EQ(parts.size(), 5u);
  EXPECT_EQ(EnumerateEmbeddablePartitions(p, EpsilonPolicy::Limit(), 2).size(),
            2u);
}

TEST(GpmPipeline, RecoversTarget) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PreferenceProfile p = GenerateComplete(3 + seed % 4, 1 + seed % 6, seed);
    const GpmPipelineResult r = GpmPipeline(p, EpsilonPolicy::Finite(0.05));
    EXPECT_LE(MaxAbsDifference(r.recovered, r.target), 1e-9);
  }
  EXPECT_ERROR_CODE(GpmPipeline(PreferenceProfile::FromRankings(3, {{0, 1, 2}}),
                                EpsilonPolicy::Limit()),
                    ErrorCode::kZeroProbability);
}

}  // namespace
}  // namespace prefaxiom

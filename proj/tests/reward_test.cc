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

#include "prefaxiom/reward.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "prefaxiom/profile_io.h"
#include "test_util.h"

namespace prefaxiom {
namespace {

using testing::FixturePath;

WeightMatrix RandomWeights(std::mt19937_64& rng, int n, bool complete) {
  std::uniform_int_distribution<int> count(complete ? 1 : 0, 6);
  RationalMatrix w = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w[i][j] = Rational(count(rng), 2);
    }
  }
  return WeightMatrix(std::move(w));
}

std::vector<std::vector<double>> AsDoubles(const WeightMatrix& w) {
  std::vector<std::vector<double>> out(w.size(), std::vector<double>(w.size()));
  for (int i = 0; i < w.size(); ++i) {
    for (int j = 0; j < w.size(); ++j) out[i][j] = ToDouble(w.at(i, j));
  }
  return out;
}

TEST(WeightMatrix, Validation) {
  RationalMatrix negative = ZeroMatrix(2);
  negative[0][1] = -1;
  EXPECT_ERROR_CODE(WeightMatrix{negative}, ErrorCode::kInvalidArgument);
  RationalMatrix diagonal = ZeroMatrix(2);
  diagonal[0][0] = 1;
  EXPECT_ERROR_CODE(WeightMatrix{diagonal}, ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(WeightMatrix{ZeroMatrix(1)}, ErrorCode::kInvalidArgument);
}

TEST(WeightMatrix, ConstantTotal) {
  const WeightMatrix standard =
      StandardWeights(Tally(LoadProfile(FixturePath("paradox.json"))));
  ASSERT_TRUE(standard.constant_total().has_value());
  EXPECT_EQ(*standard.constant_total(), 3);
  RationalMatrix uneven = ZeroMatrix(3);
  uneven[0][1] = 1;
  uneven[1][2] = 2;
  uneven[2][0] = 1;
  EXPECT_FALSE(WeightMatrix(uneven).constant_total().has_value());
  EXPECT_ERROR_CODE(Scores(WeightMatrix(uneven)), ErrorCode::kNotConstantTotal);
}

TEST(Sigmoid, StableAtExtremes) {
  EXPECT_DOUBLE_EQ(Sigmoid(0.0), 0.5);
  EXPECT_GT(Sigmoid(-800.0), -1e-300);
  EXPECT_EQ(Sigmoid(800.0), 1.0);
  EXPECT_NEAR(LogSigmoid(-800.0), -800.0, 1e-9);
  EXPECT_NEAR(LogSigmoid(2.0), std::log(oracle::Sigmoid(2.0)), 1e-15);
}

TEST(Loss, MatchesDefinition) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const WeightMatrix w = RandomWeights(rng, n, false);
    std::vector<double> r(n);
    for (double& v : r) v = u(rng);
    EXPECT_NEAR(Loss(w, r), oracle::Loss(AsDoubles(w), r), 1e-9);
  }
  const WeightMatrix w = RandomWeights(rng, 3, true);
  EXPECT_ERROR_CODE(Loss(w, std::vector<double>{0.0}),
                    ErrorCode::kDimensionMismatch);
  EXPECT_ERROR_CODE(Gradient(w, std::vector<double>{0.0, 1.0}),
                    ErrorCode::kDimensionMismatch);
}

TEST(Gradient, MatchesFiniteDifferences) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const WeightMatrix w = RandomWeights(rng, n, false);
    std::vector<double> r(n);
    for (double& v : r) v = u(rng);
    const auto dw = AsDoubles(w);
    const auto fd = oracle::FiniteDifferenceGradient(
        [&](const std::vector<double>& x) { return oracle::Loss(dw, x); }, r,
        1e-6);
    const std::vector<double> g = Gradient(w, r);
    for (int k = 0; k < n; ++k) EXPECT_NEAR(g[k], fd[k], 1e-6);
  }
}

TEST(SolveMle, ParadoxGivesEqualRewards) {
  const RewardVector r =
      SolveMle(StandardWeights(Tally(LoadProfile(FixturePath("paradox.json")))));
  ASSERT_TRUE(r.converged());
  for (double v : r.r) EXPECT_NEAR(v, 0.0, 1e-10);
  const ResponseDistribution p = Softmax(r);
  for (double v : p.values()) EXPECT_NEAR(v, 1.0 / 3.0, 1e-10);
}

TEST(SolveMle, FourVoterFixedPoint) {
  const RewardVector r = SolveMle(
      StandardWeights(Tally(LoadProfile(FixturePath("four_voter.json")))));
  ASSERT_TRUE(r.converged());
  const std::vector<double> expected = oracle::FourVoterMleDistribution();
  const ResponseDistribution p = Softmax(r);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(p[k], expected[k], 1e-9);
  EXPECT_NEAR(p[0], 0.452, 1e-3);
}

TEST(SolveMle, StationaryAndGaugeFixed) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const WeightMatrix w = RandomWeights(rng, n, true);
    const RewardVector r = SolveMle(w);
    ASSERT_TRUE(r.converged());
    double sum = 0.0;
    for (double v : r.r) sum += v;
    EXPECT_NEAR(sum, 0.0, 1e-9);
    for (double g : Gradient(w, r.r)) EXPECT_NEAR(g, 0.0, 1e-9);
  }
}

TEST(SolveMle, GradientDescentAgreesWithNewton) {
  std::mt19937_64 rng(14);
  SolverConfig slow;
  slow.method = SolverMethod::kGradientDescentLineSearch;
  slow.grad_tol = 1e-9;
  slow.max_iters = 200000;
  for (int trial = 0; trial < 10; ++trial) {
    const WeightMatrix w = RandomWeights(rng, 4, true);
    const RewardVector a = SolveMle(w);
    const RewardVector b = SolveMle(w, slow);
    ASSERT_TRUE(b.converged());
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(a.r[k], b.r[k], 1e-7);
  }
}

TEST(SolveMle, TransitiveTournamentDiverges) {
  const WeightMatrix w = StandardWeights(
      Tally(LoadProfile(FixturePath("transitive_tournament.json"))));
  const RewardVector r = SolveMle(w);
  ASSERT_TRUE(r.diverged());
  const Diverged& d = std::get<Diverged>(r.status);
  // Order b > a > c > d: b is the source, d the sink.
  EXPECT_EQ(d.drifting_up, (std::vector<int>{1}));
  EXPECT_EQ(d.drifting_down, (std::vector<int>{3}));
  EXPECT_ERROR_CODE(Softmax(r), ErrorCode::kNotConverged);
  // The exact scores still give the order.
  EXPECT_EQ(RankByScores(w).Order(), (std::vector<int>{1, 0, 2, 3}));
}

TEST(SolveMle, RidgeKeepsScoreOrder) {
  const WeightMatrix w = StandardWeights(
      Tally(LoadProfile(FixturePath("transitive_tournament.json"))));
  SolverConfig ridge;
  ridge.ridge = 1e-3;
  const RewardVector r = SolveMle(w, ridge);
  ASSERT_TRUE(r.converged());
  EXPECT_EQ(RankingFromValues(r.r, 1e-9).Order(), RankByScores(w).Order());
}

TEST(SolveMle, DisconnectedGraph) {
  const WeightMatrix w =
      StandardWeights(Tally(LoadProfile(FixturePath("disconnected.json"))));
  EXPECT_ERROR_CODE(SolveMle(w), ErrorCode::kDisconnectedGraph);
}

TEST(SolveMle, SingleCycleIsFinite) {
  const WeightMatrix w = StandardWeights(
      Tally(LoadProfile(FixturePath("single_voter_cycle.json"))));
  const RewardVector r = SolveMle(w);
  ASSERT_TRUE(r.converged());
  for (double v : r.r) EXPECT_NEAR(v, 0.0, 1e-10);
}

TEST(Scores, BordaAndCopeland) {
  const PairwiseTally t = Tally(LoadProfile(FixturePath("four_voter.json")));
  EXPECT_EQ(Scores(StandardWeights(t)).values,
            (std::vector<Rational>{Rational(5, 4), 1, Rational(3, 4)}));
  // A beats B 3-1, ties C 2-2; B beats C 3-1.
  EXPECT_EQ(Scores(CopelandWeights(t)).values,
            (std::vector<Rational>{Rational(3, 2), 1, Rational(1, 2)}));
  EXPECT_ERROR_CODE(CopelandWeights(t, MajorityTiePolicy::kStrictOnly),
                    ErrorCode::kUnexpectedTie);
}

TEST(GpmWeights, RecoversTarget) {
  const std::vector<Rational> p{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  const WeightMatrix w = GpmWeights(p);
  EXPECT_EQ(w.at(0, 1), Rational(3, 5));
  ASSERT_TRUE(w.constant_total().has_value());
  const RewardVector r = SolveMle(w);
  ASSERT_TRUE(r.converged());
  const ResponseDistribution q = Softmax(r);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(q[k], ToDouble(p[k]), 1e-9);
  EXPECT_ERROR_CODE(GpmWeights(std::vector<Rational>{1, 0}),
                    ErrorCode::kZeroProbability);
}

TEST(ResponseDistribution, Validation) {
  EXPECT_ERROR_CODE(ResponseDistribution({0.5, 0.6}), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(ResponseDistribution({1.5, -0.5}), ErrorCode::kInvalidArgument);
  EXPECT_NEAR(MaxAbsDifference(ResponseDistribution::Uniform(2),
                               ResponseDistribution({0.75, 0.25})),
              0.25, 1e-15);
}

}  // namespace
}  // namespace prefaxiom

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

// Reward modeling as weighted Bradley-Terry maximum likelihood.
//
// For a weight matrix w (w[i][j] is the weight on "y_i beats y_j") the loss
//
//   L(r) = -sum_{i<j} [ w_ij log s(r_i - r_j) + w_ji log s(r_j - r_i) ]
//
// is convex and invariant under r -> r + c. When every pair carries the same
// total weight M, any finite minimizer orders candidates exactly by the score
// m_k = sum_j w_kj / M, so rankings can be read off exactly without solving.
// Standard weights (raw win counts) make m_k the Borda count; majority
// indicator weights make it the Copeland score.

#ifndef PREFAXIOM_REWARD_H_
#define PREFAXIOM_REWARD_H_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "prefaxiom/profile.h"
#include "prefaxiom/rational.h"
#include "prefaxiom/rules.h"

namespace prefaxiom {

class WeightMatrix {
 public:
  // Square, non-negative, zero diagonal.
  explicit WeightMatrix(RationalMatrix weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& at(int i, int j) const { return weights_.at(i).at(j); }
  Rational PairTotal(int i, int j) const {
    return weights_[i][j] + weights_[j][i];
  }
  const RationalMatrix& matrix() const { return weights_; }

  // The common pair total M when every pair sums to the same M > 0;
  // nullopt in unconstrained mode.
  const std::optional<Rational>& constant_total() const {
    return constant_total_;
  }

 private:
  RationalMatrix weights_;
  std::optional<Rational> constant_total_;
};

struct Converged {
  double grad_norm = 0.0;
  int iterations = 0;
};
// No finite minimizer: candidates in `drifting_up` separate towards +inf and
// those in `drifting_down` towards -inf.
struct Diverged {
  std::vector<int> drifting_up;
  std::vector<int> drifting_down;
  int iterations = 0;
};
struct MaxIters {
  double grad_norm = 0.0;
};
using SolverStatus = std::variant<Converged, Diverged, MaxIters>;

// Rewards in the sum-zero gauge.
struct RewardVector {
  std::vector<double> r;
  SolverStatus status = Converged{};

  int size() const { return static_cast<int>(r.size()); }
  bool converged() const { return std::holds_alternative<Converged>(status); }
  bool diverged() const { return std::holds_alternative<Diverged>(status); }
};

class ResponseDistribution {
 public:
  // Entries non-negative and summing to one within 1e-12.
  explicit ResponseDistribution(std::vector<double> p);
  static ResponseDistribution FromRationals(const std::vector<Rational>& p);
  static ResponseDistribution Uniform(int n);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_.at(i); }
  const std::vector<double>& values() const { return p_; }

 private:
  std::vector<double> p_;
};

double MaxAbsDifference(const ResponseDistribution& a,
                        const ResponseDistribution& b);

enum class SolverMethod { kNewtonReduced, kGradientDescentLineSearch };

struct SolverConfig {
  double grad_tol = 1e-10;
  int max_iters = 10000;
  // |r_i| beyond which a problem without finite minimizer is declared
  // divergent.
  double divergence_radius = 30.0;
  SolverMethod method = SolverMethod::kNewtonReduced;
  // Optional Tikhonov term ridge * sum_k r_k^2. Zero means none.
  double ridge = 0.0;
};

double Sigmoid(double x);
double LogSigmoid(double x);

// Throws kDimensionMismatch when r has the wrong length.
double Loss(const WeightMatrix& weights, std::span<const double> r);
std::vector<double> Gradient(const WeightMatrix& weights,
                             std::span<const double> r);

// Minimizes Loss (+ ridge term) in the sum-zero gauge. Throws
// kDisconnectedGraph when the pairs with positive total weight do not
// connect all candidates.
RewardVector SolveMle(const WeightMatrix& weights,
                      const SolverConfig& config = SolverConfig());

// m_k = sum_{j != k} w_kj / M. Throws kNotConstantTotal.
ScoreVector Scores(const WeightMatrix& weights);

// The ordering any (possibly infinite) minimizer induces, read off the
// scores exactly. Throws kNotConstantTotal.
Ranking RankByScores(const WeightMatrix& weights,
                     RankingTiePolicy policy = RankingTiePolicy::kGroupTies);

// Throws kNotConverged unless the reward vector converged.
ResponseDistribution Softmax(const RewardVector& rewards);
ResponseDistribution SoftmaxValues(std::span<const double> r);

// w = raw win counts. Unequal pair totals leave the matrix unconstrained.
WeightMatrix StandardWeights(const PairwiseTally& tally);

// w_ij = 1[P_ij > 1/2]; ties give 1/2 each under kHalfPoint and raise
// kUnexpectedTie under kStrictOnly. Requires every pair.
WeightMatrix CopelandWeights(
    const PairwiseTally& tally,
    MajorityTiePolicy policy = MajorityTiePolicy::kHalfPoint);

// w_ij = p_i / (p_i + p_j). Throws kZeroProbability for any p_i <= 0.
WeightMatrix GpmWeights(const std::vector<Rational>& target);
// The doubles are converted exactly.
WeightMatrix GpmWeights(const ResponseDistribution& target);

}  // namespace prefaxiom

#endif  // PREFAXIOM_REWARD_H_

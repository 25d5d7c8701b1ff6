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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

using DoubleMatrix = std::vector<std::vector<double>>;

DoubleMatrix ToDoubles(const WeightMatrix& weights) {
  const int n = weights.size();
  DoubleMatrix w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = ToDouble(weights.at(i, j));
  }
  return w;
}

void CheckLength(const WeightMatrix& weights, std::span<const double> r) {
  if (static_cast<int>(r.size()) != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reward vector has " + std::to_string(r.size()) +
                    " entries for " + std::to_string(weights.size()) +
                    " candidates");
  }
}

double LossOf(const DoubleMatrix& w, std::span<const double> r, double ridge) {
  const int n = static_cast<int>(w.size());
  double loss = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = r[i] - r[j];
      if (w[i][j] != 0.0) loss -= w[i][j] * LogSigmoid(d);
      if (w[j][i] != 0.0) loss -= w[j][i] * LogSigmoid(-d);
    }
  }
  if (ridge > 0.0) {
    for (double v : r) loss += ridge * v * v;
  }
  return loss;
}

Eigen::VectorXd GradientOf(const DoubleMatrix& w, std::span<const double> r,
                           double ridge) {
  const int n = static_cast<int>(w.size());
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      g[k] -= w[k][j] - (w[k][j] + w[j][k]) * Sigmoid(r[k] - r[j]);
    }
    g[k] += 2.0 * ridge * r[k];
  }
  return g;
}

// Hessian of the loss: a weighted graph Laplacian with edge weights
// (w_ij + w_ji) s(d)(1 - s(d)).
Eigen::MatrixXd HessianOf(const DoubleMatrix& w, std::span<const double> r,
                          double ridge) {
  const int n = static_cast<int>(w.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = Sigmoid(r[i] - r[j]);
      const double c = (w[i][j] + w[j][i]) * s * (1.0 - s);
      h(i, i) += c;
      h(j, j) += c;
      h(i, j) -= c;
      h(j, i) -= c;
    }
    h(i, i) += 2.0 * ridge;
  }
  return h;
}

void Center(std::vector<double>& r) {
  const double mean =
      std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(r.size());
  for (double& v : r) v -= mean;
}

bool WeaklyConnected(const WeightMatrix& weights) {
  const int n = weights.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (weights.PairTotal(i, j) > 0) {
        int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    }
  }
  return components == 1;
}

// Strongly connected components of the "beats with positive weight" digraph
// (edge i -> j iff w_ij > 0), as a component id per candidate.
std::vector<int> StrongComponents(const WeightMatrix& weights, int* count) {
  const int n = weights.size();
  auto reach = [&](int source, bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (seen[v] || u == v) continue;
        const Rational& edge = forward ? weights.at(u, v) : weights.at(v, u);
        if (edge > 0) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return seen;
  };
  std::vector<int> component(n, -1);
  *count = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    std::vector<bool> fwd = reach(s, true);
    std::vector<bool> bwd = reach(s, false);
    for (int v = 0; v < n; ++v) {
      if (fwd[v] && bwd[v]) component[v] = *count;
    }
    ++*count;
  }
  return component;
}

// Source components (beaten by nobody outside) drift up, sink components
// (beating nobody outside) drift down.
Diverged DriftPartition(const WeightMatrix& weights,
                        const std::vector<int>& component, int count) {
  const int n = weights.size();
  std::vector<bool> has_in(count, false), has_out(count, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && component[i] != component[j] && weights.at(i, j) > 0) {
        has_out[component[i]] = true;
        has_in[component[j]] = true;
      }
    }
  }
  Diverged drift;
  for (int i = 0; i < n; ++i) {
    if (!has_in[component[i]]) drift.drifting_up.push_back(i);
    if (!has_out[component[i]]) drift.drifting_down.push_back(i);
  }
  return drift;
}

}  // namespace

WeightMatrix::WeightMatrix(RationalMatrix weights)
    : weights_(std::move(weights)) {
  const int n = size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two candidates");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(weights_[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "weight matrix is not square");
    }
    if (weights_[i][i] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-zero diagonal weight");
    }
    for (int j = 0; j < n; ++j) {
      if (weights_[i][j] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "negative weight");
      }
    }
  }
  Rational total = PairTotal(0, 1);
  bool constant = total > 0;
  for (int i = 0; i < n && constant; ++i) {
    for (int j = i + 1; j < n && constant; ++j) {
      if (PairTotal(i, j) != total) constant = false;
    }
  }
  if (constant) constant_total_ = total;
}

ResponseDistribution::ResponseDistribution(std::vector<double> p)
    : p_(std::move(p)) {
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "distribution has a negative or NaN entry");
    }
    sum += v;
  }
  if (p_.empty() || std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "distribution does not sum to one");
  }
}

ResponseDistribution ResponseDistribution::FromRationals(
    const std::vector<Rational>& p) {
  std::vector<double> values;
  values.reserve(p.size());
  for (const Rational& v : p) values.push_back(ToDouble(v));
  return ResponseDistribution(std::move(values));
}

ResponseDistribution ResponseDistribution::Uniform(int n) {
  return ResponseDistribution(std::vector<double>(n, 1.0 / n));
}

double MaxAbsDifference(const ResponseDistribution& a,
                        const ResponseDistribution& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "distribution sizes differ");
  }
  double gap = 0.0;
  for (int i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double LogSigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double Loss(const WeightMatrix& weights, std::span<const double> r) {
  CheckLength(weights, r);
  return LossOf(ToDoubles(weights), r, 0.0);
}

std::vector<double> Gradient(const WeightMatrix& weights,
                             std::span<const double> r) {
  CheckLength(weights, r);
  Eigen::VectorXd g = GradientOf(ToDoubles(weights), r, 0.0);
  return std::vector<double>(g.data(), g.data() + g.size());
}

RewardVector SolveMle(const WeightMatrix& weights, const SolverConfig& config) {
  if (!(config.grad_tol > 0.0) || !(config.divergence_radius > 0.0) ||
      config.ridge < 0.0 || config.max_iters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "invalid solver configuration");
  }
  if (!WeaklyConnected(weights)) {
    throw Error(ErrorCode::kDisconnectedGraph,
                "comparison graph does not connect all candidates");
  }
  const int n = weights.size();
  const DoubleMatrix w = ToDoubles(weights);
  const double ridge = config.ridge;

  // Without the ridge term a finite minimizer exists iff every candidate
  // both beats and is beaten through some chain of positive weights.
  int component_count = 0;
  const std::vector<int> component = StrongComponents(weights, &component_count);
  const bool finite_minimum = ridge > 0.0 || component_count == 1;

  // The loss is invariant along the all-ones direction, so Newton steps are
  // solved on its orthogonal complement: adding J/n leaves directions in the
  // sum-zero subspace untouched and makes the system nonsingular there.
  const Eigen::MatrixXd gauge =
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));

  std::vector<double> r(n, 0.0);
  std::vector<double> trial(n, 0.0);
  double loss = LossOf(w, r, ridge);
  Eigen::VectorXd g = GradientOf(w, r, ridge);

  for (int iter = 0; iter < config.max_iters; ++iter) {
    const double grad_norm = g.norm();
    if (finite_minimum && grad_norm <= config.grad_tol) {
      return {r, Converged{grad_norm, iter}};
    }
    if (!finite_minimum) {
      double radius = 0.0;
      for (double v : r) radius = std::max(radius, std::abs(v));
      if (radius > config.divergence_radius) {
        Diverged drift = DriftPartition(weights, component, component_count);
        drift.iterations = iter;
        return {r, drift};
      }
    }

    Eigen::VectorXd direction = -g;
    if (config.method == SolverMethod::kNewtonReduced) {
      Eigen::LDLT<Eigen::MatrixXd> ldlt(HessianOf(w, r, ridge) + gauge);
      if (ldlt.info() == Eigen::Success) {
        Eigen::VectorXd newton = ldlt.solve(-g);
        // Fall back to steepest descent on an ill-conditioned system.
        if (newton.allFinite() && newton.dot(g) < 0.0) direction = newton;
      }
    }

    const double slope = direction.dot(g);
    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd trial_g;
    for (int halving = 0; halving < 60; ++halving, step *= 0.5) {
      for (int k = 0; k < n; ++k) trial[k] = r[k] + step * direction[k];
      Center(trial);
      const double trial_loss = LossOf(w, trial, ridge);
      if (trial_loss <= loss + 1e-4 * step * slope) {
        accepted = true;
      } else if (trial_loss <= loss + 1e-12 * std::max(1.0, std::abs(loss))) {
        // Near the optimum the loss change drops below rounding. The loss is
        // convex along the line, so a non-positive slope at the trial point
        // still certifies descent.
        trial_g = GradientOf(w, trial, ridge);
        accepted = trial_g.dot(direction) <= 0.0;
      }
      if (accepted) {
        loss = trial_loss;
        break;
      }
    }
    if (!accepted) return {r, MaxIters{grad_norm}};
    r.swap(trial);
    g = GradientOf(w, r, ridge);
  }
  return {r, MaxIters{g.norm()}};
}

ScoreVector Scores(const WeightMatrix& weights) {
  if (!weights.constant_total()) {
    throw Error(ErrorCode::kNotConstantTotal,
                "pair totals differ; scores are undefined");
  }
  const Rational& total = *weights.constant_total();
  const int n = weights.size();
  ScoreVector scores{std::vector<Rational>(n, Rational(0)),
                     ScoreRule::kGeneralScore};
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (j != k) scores.values[k] += weights.at(k, j);
    }
    scores.values[k] /= total;
  }
  return scores;
}

Ranking RankByScores(const WeightMatrix& weights, RankingTiePolicy policy) {
  return RankingFromScores(Scores(weights), policy);
}

ResponseDistribution Softmax(const RewardVector& rewards) {
  if (!rewards.converged()) {
    throw Error(ErrorCode::kNotConverged,
                "softmax needs a converged (finite) reward vector");
  }
  return SoftmaxValues(rewards.r);
}

ResponseDistribution SoftmaxValues(std::span<const double> r) {
  const double top = *std::max_element(r.begin(), r.end());
  std::vector<double> p(r.size());
  double sum = 0.0;
  for (size_t i = 0; i < r.size(); ++i) {
    p[i] = std::exp(r[i] - top);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return ResponseDistribution(std::move(p));
}

WeightMatrix StandardWeights(const PairwiseTally& tally) {
  return WeightMatrix(tally.win_matrix());
}

WeightMatrix CopelandWeights(const PairwiseTally& tally,
                             MajorityTiePolicy policy) {
  tally.RequireAllPairs();
  MajorityRelation relation = ComputeMajorityRelation(tally, policy);
  const int n = tally.size();
  RationalMatrix w = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Duel d = relation.at(i, j);
      if (d == Duel::kWin) {
        w[i][j] = 1;
      } else if (d == Duel::kTie) {
        w[i][j] = Rational(1, 2);
      }
    }
  }
  return WeightMatrix(std::move(w));
}

WeightMatrix GpmWeights(const std::vector<Rational>& target) {
  const int n = static_cast<int>(target.size());
  for (int i = 0; i < n; ++i) {
    if (target[i] <= 0) {
      throw Error(ErrorCode::kZeroProbability,
                  "target probability of candidate " + std::to_string(i) +
                      " is not positive");
    }
  }
  RationalMatrix w = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w[i][j] = target[i] / (target[i] + target[j]);
    }
  }
  return WeightMatrix(std::move(w));
}

WeightMatrix GpmWeights(const ResponseDistribution& target) {
  std::vector<Rational> exact;
  exact.reserve(target.size());
  for (double v : target.values()) exact.push_back(FromDouble(v));
  return GpmWeights(exact);
}

}  // namespace prefaxiom

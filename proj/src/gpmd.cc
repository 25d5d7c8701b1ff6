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

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "prefaxiom/axioms.h"
#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

void RequireComplete(const PreferenceProfile& profile) {
  if (!profile.IsComplete()) {
    throw Error(ErrorCode::kNotCompleteProfile,
                "matching distributions need every voter to submit a ranking");
  }
}

void RequireEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
}

std::vector<double> Average(const PreferenceProfile& profile,
                            std::span<const int> voters,
                            const EpsilonPolicy& policy) {
  const int n = profile.num_candidates();
  std::vector<double> sum(n, 0.0);
  for (int v : voters) {
    const Ranking& ranking = profile.voter(v).ranking();
    if (policy.is_limit()) {
      sum[ranking.TopTier().front()] += 1.0;
    } else {
      const ResponseDistribution p = PmGeometric(ranking, policy.epsilon());
      for (int i = 0; i < n; ++i) sum[i] += p[i];
    }
  }
  for (double& v : sum) v /= static_cast<double>(voters.size());
  return sum;
}

ResponseDistribution Normalized(std::vector<double> p) {
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= total;
  return ResponseDistribution(std::move(p));
}

// Connected components of the "interior proportion" graph, ordered so that
// every earlier tier unanimously beats every later one. nullopt if the
// unanimous pairs do not respect a single linear order of components.
std::optional<std::vector<std::vector<int>>> UnanimityTiers(
    const PairwiseTally& tally) {
  const int n = tally.size();
  std::vector<int> component(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    std::vector<int> stack{s};
    component[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u || component[v] >= 0) continue;
        const Rational p = tally.Prop(u, v);
        if (p > 0 && p < 1) {
          component[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> tiers(count);
  for (int i = 0; i < n; ++i) tiers[component[i]].push_back(i);
  // A component's rank is the number of components it unanimously beats.
  std::vector<int> beats(count, 0);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      bool all_win = true;
      bool all_lose = true;
      for (int i : tiers[a]) {
        for (int j : tiers[b]) {
          const Rational p = tally.Prop(i, j);
          all_win = all_win && p == 1;
          all_lose = all_lose && p == 0;
        }
      }
      if (!all_win && !all_lose) return std::nullopt;
      if (all_win) ++beats[a];
    }
  }
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return beats[a] > beats[b]; });
  std::vector<std::vector<int>> sorted;
  for (int k = 0; k < count; ++k) {
    if (beats[order[k]] != count - 1 - k) return std::nullopt;
    sorted.push_back(std::move(tiers[order[k]]));
  }
  return sorted;
}

PairwiseTally Restrict(const PairwiseTally& tally,
                       const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  RationalMatrix wins = ZeroMatrix(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b) wins[a][b] = tally.wins(members[a], members[b]);
    }
  }
  return PairwiseTally::FromWins(std::move(wins));
}

std::vector<std::vector<int>> Canonical(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

EpsilonPolicy EpsilonPolicy::Finite(double epsilon) {
  RequireEpsilon(epsilon);
  return EpsilonPolicy(epsilon);
}

ResponseDistribution PmGeometric(const Ranking& ranking, double epsilon) {
  if (!ranking.IsStrict()) {
    throw Error(ErrorCode::kTiesNotAllowed,
                "the geometric matching distribution needs a strict ranking");
  }
  RequireEpsilon(epsilon);
  const int n = ranking.size();
  const double c = epsilon / (1.0 - epsilon);
  const double norm = (1.0 - c) / (1.0 - std::pow(c, n));
  std::vector<double> p(n);
  const std::vector<int> order = ranking.Order();
  for (int k = 0; k < n; ++k) p[order[k]] = norm * std::pow(c, k);
  return Normalized(std::move(p));
}

ResponseDistribution Gpmd(const PreferenceProfile& profile,
                          const EpsilonPolicy& policy) {
  RequireComplete(profile);
  if (policy.is_limit()) {
    return ResponseDistribution::FromRationals(FirstPlaceShares(profile));
  }
  std::vector<int> all(profile.num_voters());
  std::iota(all.begin(), all.end(), 0);
  return Normalized(Average(profile, all, policy));
}

Partition::Partition(std::vector<std::vector<int>> blocks, int num_voters)
    : blocks_(std::move(blocks)) {
  std::vector<bool> seen(std::max(num_voters, 0), false);
  int covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "partition has an empty block");
    }
    for (int v : block) {
      if (v < 0 || v >= num_voters || seen[v]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "partition blocks must be disjoint voter indices in range");
      }
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != num_voters) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition does not cover every voter");
  }
}

Partition Partition::Singletons(int num_voters) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < num_voters; ++v) blocks.push_back({v});
  return Partition(std::move(blocks), num_voters);
}

Partition Partition::OneBlock(int num_voters) {
  std::vector<int> all(num_voters);
  std::iota(all.begin(), all.end(), 0);
  return Partition({std::move(all)}, num_voters);
}

PairwiseTally SmoothedTally(const PreferenceProfile& profile,
                            std::span<const int> voters, double epsilon) {
  RequireComplete(profile);
  RequireEpsilon(epsilon);
  const int n = profile.num_candidates();
  const double c = epsilon / (1.0 - epsilon);
  RationalMatrix wins = ZeroMatrix(n);
  for (int v : voters) {
    const std::vector<int> order = profile.voter(v).ranking().Order();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const Rational win = FromDouble(1.0 / (1.0 + std::pow(c, b - a)));
        wins[order[a]][order[b]] += win;
        wins[order[b]][order[a]] += 1 - win;
      }
    }
  }
  return PairwiseTally::FromWins(std::move(wins));
}

std::optional<ResponseDistribution> LimitMatchingDistribution(
    const PairwiseTally& tally, double tol) {
  tally.RequireAllPairs();
  std::optional<std::vector<std::vector<int>>> tiers = UnanimityTiers(tally);
  if (!tiers) return std::nullopt;
  std::vector<double> top_rewards;
  for (std::size_t t = 0; t < tiers->size(); ++t) {
    const std::vector<int>& members = (*tiers)[t];
    if (members.size() < 2) {
      if (t == 0) top_rewards = {0.0};
      continue;
    }
    std::optional<RewardVector> rewards =
        BtEmbeddable(Restrict(tally, members), tol);
    if (!rewards) return std::nullopt;
    if (t == 0) top_rewards = rewards->r;
  }
  const ResponseDistribution top = SoftmaxValues(top_rewards);
  std::vector<double> p(tally.size(), 0.0);
  const std::vector<int>& leaders = tiers->front();
  for (std::size_t k = 0; k < leaders.size(); ++k) p[leaders[k]] = top[k];
  return ResponseDistribution(std::move(p));
}

bool BlockEmbeddable(const PreferenceProfile& profile,
                     std::span<const int> voters, const EpsilonPolicy& policy,
                     double tol) {
  RequireComplete(profile);
  if (voters.size() == 1) return true;
  if (policy.is_limit()) {
    return LimitMatchingDistribution(Tally(profile.Subprofile(voters)), tol)
        .has_value();
  }
  return BtEmbeddable(SmoothedTally(profile, voters, policy.epsilon()), tol)
      .has_value();
}

PartitionGpmd GpmdViaPartition(const PreferenceProfile& profile,
                               const Partition& partition,
                               const EpsilonPolicy& policy, double tol) {
  RequireComplete(profile);
  Partition checked(partition.blocks(), profile.num_voters());
  const int n = profile.num_candidates();
  std::vector<double> mix(n, 0.0);
  std::vector<BlockDiagnostic> diagnostics;
  for (int b = 0; b < checked.num_blocks(); ++b) {
    const std::vector<int>& block = checked.blocks()[b];
    const std::vector<double> members = Average(profile, block, policy);
    std::vector<double> contribution = members;
    if (block.size() > 1) {
      std::optional<std::vector<double>> pooled;
      if (policy.is_limit()) {
        auto dist =
            LimitMatchingDistribution(Tally(profile.Subprofile(block)), tol);
        if (dist) pooled = dist->values();
      } else {
        auto rewards =
            BtEmbeddable(SmoothedTally(profile, block, policy.epsilon()), tol);
        if (rewards) pooled = SoftmaxValues(rewards->r).values();
      }
      if (!pooled) {
        throw Error(ErrorCode::kBlockNotEmbeddable,
                    "block " + std::to_string(b) +
                        " has no preference matching distribution");
      }
      double gap = 0.0;
      for (int i = 0; i < n; ++i) {
        gap = std::max(gap, std::abs((*pooled)[i] - members[i]));
      }
      diagnostics.push_back({b, gap});
      if (!policy.is_limit()) contribution = *pooled;
    }
    const double weight =
        static_cast<double>(block.size()) / profile.num_voters();
    for (int i = 0; i < n; ++i) mix[i] += weight * contribution[i];
  }
  return {Normalized(std::move(mix)), std::move(diagnostics)};
}

std::vector<Partition> EnumerateEmbeddablePartitions(
    const PreferenceProfile& profile, const EpsilonPolicy& policy, int budget,
    double tol) {
  RequireComplete(profile);
  const int m = profile.num_voters();
  std::vector<Partition> found;
  if (budget <= 0) return found;
  std::set<std::vector<std::vector<int>>> seen;
  std::deque<std::vector<std::vector<int>>> queue;
  auto start = Canonical(Partition::Singletons(m).blocks());
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty() && static_cast<int>(found.size()) < budget) {
    std::vector<std::vector<int>> blocks = std::move(queue.front());
    queue.pop_front();
    found.emplace_back(blocks, m);
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        std::vector<int> merged = blocks[a];
        merged.insert(merged.end(), blocks[b].begin(), blocks[b].end());
        std::sort(merged.begin(), merged.end());
        std::vector<std::vector<int>> next;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          if (k != a && k != b) next.push_back(blocks[k]);
        }
        next.push_back(merged);
        next = Canonical(std::move(next));
        if (seen.count(next)) continue;
        seen.insert(next);
        if (!BlockEmbeddable(profile, merged, policy, tol)) continue;
        queue.push_back(std::move(next));
      }
    }
  }
  return found;
}

GpmPipelineResult GpmPipeline(const PreferenceProfile& profile,
                              const EpsilonPolicy& policy,
                              const SolverConfig& config) {
  ResponseDistribution target = Gpmd(profile, policy);
  RewardVector fitted = SolveMle(GpmWeights(target), config);
  if (!fitted.converged()) {
    throw Error(ErrorCode::kNotConverged,
                "reward fit for the matching target did not converge");
  }
  ResponseDistribution recovered = Softmax(fitted);
  return {std::move(target), std::move(fitted), std::move(recovered)};
}

}  // namespace prefaxiom

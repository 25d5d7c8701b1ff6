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

// Group preference matching distributions.
//
// A single strict ballot y_(1) > ... > y_(n) is matched by the geometric
// distribution in which every adjacent pair is won with probability 1 - eps:
//
//   p_(k) = (1 - c) c^(k-1) / (1 - c^n),   c = eps / (1 - eps).
//
// The group distribution averages these over voters; as eps -> 0 it tends to
// the share of voters ranking each candidate first.

#ifndef PREFAXIOM_GPMD_H_
#define PREFAXIOM_GPMD_H_

#include <optional>
#include <span>
#include <vector>

#include "prefaxiom/profile.h"
#include "prefaxiom/reward.h"

namespace prefaxiom {

class EpsilonPolicy {
 public:
  // Throws kInvalidArgument unless 0 < epsilon < 1/2.
  static EpsilonPolicy Finite(double epsilon = 1e-3);
  static EpsilonPolicy Limit() { return EpsilonPolicy(0.0); }

  bool is_limit() const { return epsilon_ == 0.0; }
  // Zero in limit mode.
  double epsilon() const { return epsilon_; }

 private:
  explicit EpsilonPolicy(double epsilon) : epsilon_(epsilon) {}
  double epsilon_;
};

// Throws kTiesNotAllowed for rankings with indifference classes.
ResponseDistribution PmGeometric(const Ranking& ranking, double epsilon);

// Canonical group distribution: voter average of PmGeometric under a finite
// policy, first-place shares in the limit. Throws kNotCompleteProfile.
ResponseDistribution Gpmd(const PreferenceProfile& profile,
                          const EpsilonPolicy& policy);

class Partition {
 public:
  // Blocks must be non-empty, disjoint and cover 0..num_voters-1.
  Partition(std::vector<std::vector<int>> blocks, int num_voters);
  static Partition Singletons(int num_voters);
  static Partition OneBlock(int num_voters);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  bool operator==(const Partition& other) const {
    return blocks_ == other.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
};

// Pairwise tally of a voter block in which each ballot contributes the
// proportions of its own geometric distribution instead of hard 0/1 wins.
PairwiseTally SmoothedTally(const PreferenceProfile& profile,
                            std::span<const int> voters, double epsilon);

// Limit-mode matching distribution of a tally whose pairs are either interior
// and Bradley-Terry consistent or unanimous between ordered tiers: mass is
// spread over the top tier by its embedded rewards. nullopt if the tally has
// no such structure.
std::optional<ResponseDistribution> LimitMatchingDistribution(
    const PairwiseTally& tally, double tol);

// Whether a voter block has a preference matching distribution under the
// policy: the smoothed tally is embeddable (finite), or the raw tally has the
// tiered structure above (limit). Singletons always qualify.
bool BlockEmbeddable(const PreferenceProfile& profile,
                     std::span<const int> voters, const EpsilonPolicy& policy,
                     double tol = 1e-9);

struct BlockDiagnostic {
  int block = 0;
  // Max-norm gap between the block's pooled matching distribution and the
  // average of its members' own distributions.
  double pooled_vs_member_gap = 0.0;
};

struct PartitionGpmd {
  ResponseDistribution distribution;
  std::vector<BlockDiagnostic> diagnostics;
};

// Block-size-weighted average of block matching distributions. Under a
// finite policy a multi-voter block contributes the softmax of the rewards
// recovered from its smoothed tally; in the limit each block contributes the
// average of its members' limit distributions, with the pooled alternative
// reported in `diagnostics`. Throws kBlockNotEmbeddable naming the block.
PartitionGpmd GpmdViaPartition(const PreferenceProfile& profile,
                               const Partition& partition,
                               const EpsilonPolicy& policy, double tol = 1e-9);

// The all-singleton partition first, then partitions reached by merging two
// blocks whose union stays embeddable, breadth first, up to `budget`
// partitions in total.
std::vector<Partition> EnumerateEmbeddablePartitions(
    const PreferenceProfile& profile, const EpsilonPolicy& policy,
    int budget = 64, double tol = 1e-9);

struct GpmPipelineResult {
  ResponseDistribution target;
  RewardVector fitted;
  ResponseDistribution recovered;
};

// Target = Gpmd, fitted = SolveMle(GpmWeights(target)), recovered = softmax.
// Throws kZeroProbability when the target has empty entries and
// kNotConverged when the solver does not converge.
GpmPipelineResult GpmPipeline(const PreferenceProfile& profile,
                              const EpsilonPolicy& policy,
                              const SolverConfig& config = SolverConfig());

}  // namespace prefaxiom

#endif  // PREFAXIOM_GPMD_H_

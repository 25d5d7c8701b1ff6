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

// Preference profiles: candidates, voters holding either a strict ranking or
// a set of binary comparisons, the pairwise tally derived from them, and the
// majority relation on that tally.

#ifndef PREFAXIOM_PROFILE_H_
#define PREFAXIOM_PROFILE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "prefaxiom/rational.h"

namespace prefaxiom {

class CandidateSet {
 public:
  // Labels must be unique and non-empty; at least two are required.
  explicit CandidateSet(std::vector<std::string> names);

  // y1, y2, ..., yn.
  static CandidateSet Numbered(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> IndexOf(std::string_view label) const;

  bool operator==(const CandidateSet& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
};

// One voter's judgement that `winner` is preferred to `loser`.
struct PairPreference {
  int winner = 0;
  int loser = 0;

  auto operator<=>(const PairPreference&) const = default;
};

// A judgement attributed to a voter (index into PreferenceProfile::voters()).
struct Comparison {
  int voter = 0;
  int winner = 0;
  int loser = 0;
};

// An ordering of candidates from most to least preferred, possibly grouped
// into indifference classes ("tiers"). Voter ballots are always strict; tiers
// only arise in aggregate rankings.
class Ranking {
 public:
  Ranking() = default;

  // `order` must be a permutation of 0..n-1.
  static Ranking Strict(std::vector<int> order);
  // Tiers must be non-empty and together form a permutation of 0..n-1.
  static Ranking FromTiers(std::vector<std::vector<int>> tiers);

  int size() const { return static_cast<int>(position_.size()); }
  const std::vector<std::vector<int>>& tiers() const { return tiers_; }
  std::vector<int> Order() const;
  bool IsStrict() const { return static_cast<int>(tiers_.size()) == size(); }

  // Index of the tier holding `candidate`; smaller is better.
  int TierOf(int candidate) const { return position_.at(candidate); }
  // True iff `a` sits in a strictly better tier than `b`.
  bool Prefers(int a, int b) const { return TierOf(a) < TierOf(b); }
  const std::vector<int>& TopTier() const { return tiers_.front(); }

  // Every ordered pair this ranking strictly decides, as winner/loser.
  std::vector<PairPreference> ImpliedComparisons() const;

  bool operator==(const Ranking& other) const { return tiers_ == other.tiers_; }

 private:
  explicit Ranking(std::vector<std::vector<int>> tiers);

  std::vector<std::vector<int>> tiers_;
  std::vector<int> position_;
};

struct Voter {
  std::string id;
  // Exactly one of a strict ranking (complete ballot) or a comparison set.
  std::variant<Ranking, std::vector<PairPreference>> preference;

  bool HasRanking() const {
    return std::holds_alternative<Ranking>(preference);
  }
  const Ranking& ranking() const { return std::get<Ranking>(preference); }
  // The ranking expanded to all C(n,2) pairs, or the comparison set as given.
  std::vector<PairPreference> Comparisons() const;
};

enum class ProfileKind { kComplete, kGeneralized };

class PreferenceProfile {
 public:
  // Throws kInvalidArgument on an empty voter list, a non-strict or
  // wrong-sized ranking, an out-of-range or self comparison, or the same
  // unordered pair judged twice by one voter.
  PreferenceProfile(CandidateSet candidates, std::vector<Voter> voters);

  // Complete profile over y1..yn with voters v1..vm.
  static PreferenceProfile FromRankings(
      int n, const std::vector<std::vector<int>>& orders);

  const CandidateSet& candidates() const { return candidates_; }
  int num_candidates() const { return candidates_.size(); }
  int num_voters() const { return static_cast<int>(voters_.size()); }
  const std::vector<Voter>& voters() const { return voters_; }
  const Voter& voter(int index) const { return voters_.at(index); }

  // kComplete iff every voter holds a strict total ranking.
  ProfileKind kind() const { return kind_; }
  bool IsComplete() const { return kind_ == ProfileKind::kComplete; }

  std::vector<Comparison> AllComparisons() const;

  // Profile restricted to the given voters, in the given order.
  PreferenceProfile Subprofile(std::span<const int> voter_indices) const;

 private:
  CandidateSet candidates_;
  std::vector<Voter> voters_;
  ProfileKind kind_;
};

// Pairwise win counts and proportions. Profile tallies hold integer counts;
// tallies built from proportions hold fractional "wins" with unit totals.
class PairwiseTally {
 public:
  // `wins` is n x n, non-negative, zero on the diagonal.
  static PairwiseTally FromWins(RationalMatrix wins);
  // `props[i][j]` for i != j must satisfy props[i][j] + props[j][i] == 1 and
  // lie in [0, 1]; totals are one on every pair.
  static PairwiseTally FromProportions(const RationalMatrix& props);

  int size() const { return static_cast<int>(wins_.size()); }
  const Rational& wins(int i, int j) const { return wins_.at(i).at(j); }
  Rational total(int i, int j) const { return wins_[i][j] + wins_[j][i]; }
  bool Defined(int i, int j) const { return i != j && total(i, j) > 0; }
  bool AllPairsDefined() const;

  // P(y_i > y_j); throws kUndefinedPair when the pair was never compared.
  Rational Prop(int i, int j) const;
  std::optional<Rational> TryProp(int i, int j) const;

  // Throws kUndefinedPair naming the first uncompared pair, if any.
  void RequireAllPairs() const;

  const RationalMatrix& win_matrix() const { return wins_; }

 private:
  explicit PairwiseTally(RationalMatrix wins) : wins_(std::move(wins)) {}

  RationalMatrix wins_;
};

PairwiseTally Tally(const PreferenceProfile& profile);

enum class Duel { kWin, kLose, kTie, kUndefined };

enum class MajorityTiePolicy {
  // Exact 1/2 proportions are rejected with kUnexpectedTie.
  kStrictOnly,
  // Exact 1/2 proportions are ties worth half a point each.
  kHalfPoint,
};

class MajorityRelation {
 public:
  explicit MajorityRelation(std::vector<std::vector<Duel>> outcome)
      : outcome_(std::move(outcome)) {}

  int size() const { return static_cast<int>(outcome_.size()); }
  // Throws kUndefinedPair for uncompared pairs.
  Duel at(int i, int j) const;
  Duel RawAt(int i, int j) const { return outcome_.at(i).at(j); }
  bool IsComplete() const;

 private:
  std::vector<std::vector<Duel>> outcome_;
};

// Win iff P > 1/2, Tie iff P == 1/2, decided in exact arithmetic.
MajorityRelation ComputeMajorityRelation(
    const PairwiseTally& tally,
    MajorityTiePolicy policy = MajorityTiePolicy::kHalfPoint);

// Shortest directed cycle of the Win digraph, starting at its smallest
// candidate, or nullopt when the digraph is acyclic. Throws
// kIncompleteRelation if any pair is undefined.
std::optional<std::vector<int>> FindCondorcetCycle(
    const MajorityRelation& relation);
inline bool HasCondorcetCycle(const MajorityRelation& relation) {
  return FindCondorcetCycle(relation).has_value();
}

// True iff the comparison digraph over `n` candidates is acyclic.
bool IsTransitive(std::span<const PairPreference> comparisons, int n);

// m voters with independent uniformly random strict rankings over y1..yn.
PreferenceProfile GenerateComplete(int n, int m, std::uint64_t seed);

struct RandomTournament {};
// Pairs follow a hidden uniformly random ranking, each flipped with
// probability `noise`.
struct FromLatentRanking {
  double noise = 0.0;
};
using TournamentModel = std::variant<RandomTournament, FromLatentRanking>;

// Exactly one comparison per unordered pair, each assigned to one of
// `num_labelers` labelers uniformly at random. Labelers left without any
// comparison are dropped.
PreferenceProfile GenerateAssumption1(int n, std::uint64_t seed,
                                      TournamentModel model,
                                      int num_labelers = 1);

// Tournament whose k-th pair (i<j, lexicographic) is won by i iff bit k of
// `mask` is set; all comparisons belong to a single labeler.
PreferenceProfile TournamentFromMask(int n, std::uint64_t mask);

// Relabels candidate i as perm[i] in every ballot. Throws kInvalidArgument
// unless perm is a bijection on 0..n-1.
PreferenceProfile ApplyPermutation(const PreferenceProfile& profile,
                                   std::span<const int> perm);
Ranking ApplyPermutation(const Ranking& ranking, std::span<const int> perm);
PairwiseTally ApplyPermutation(const PairwiseTally& tally,
                               std::span<const int> perm);

// Compares the multisets of voter preference sets, ignoring voter ids.
// A ranking and its expanded comparison set are the same preference set.
// Throws kDimensionMismatch when n or m differ.
bool ProfilesEqualAsMultisets(const PreferenceProfile& a,
                              const PreferenceProfile& b);

// Transposition of candidates i and j as a permutation vector.
std::vector<int> Transposition(int n, int i, int j);

// Statistically independent per-index seeds derived from one base seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace prefaxiom

#endif  // PREFAXIOM_PROFILE_H_

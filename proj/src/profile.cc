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

#include "prefaxiom/profile.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

bool IsPermutation(std::span<const int> values, int n) {
  if (static_cast<int>(values.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string PairName(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// Canonical preference set of a voter: sorted list of decided pairs.
std::vector<PairPreference> CanonicalPreferenceSet(const Voter& voter) {
  std::vector<PairPreference> pairs = voter.Comparisons();
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

CandidateSet::CandidateSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a candidate set needs at least two labels");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& name : names_) {
    if (name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty candidate label");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate candidate label '" + name + "'");
    }
  }
}

CandidateSet CandidateSet::Numbered(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  return CandidateSet(std::move(names));
}

std::optional<int> CandidateSet::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == label) return i;
  }
  return std::nullopt;
}

Ranking::Ranking(std::vector<std::vector<int>> tiers)
    : tiers_(std::move(tiers)) {
  int n = 0;
  for (const auto& tier : tiers_) n += static_cast<int>(tier.size());
  position_.assign(n, -1);
  for (int t = 0; t < static_cast<int>(tiers_.size()); ++t) {
    if (tiers_[t].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty tie class in ranking");
    }
    for (int c : tiers_[t]) {
      if (c < 0 || c >= n || position_[c] != -1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "ranking is not a permutation of 0.." +
                        std::to_string(n - 1));
      }
      position_[c] = t;
    }
  }
}

Ranking Ranking::Strict(std::vector<int> order) {
  std::vector<std::vector<int>> tiers;
  tiers.reserve(order.size());
  for (int c : order) tiers.push_back({c});
  return Ranking(std::move(tiers));
}

Ranking Ranking::FromTiers(std::vector<std::vector<int>> tiers) {
  return Ranking(std::move(tiers));
}

std::vector<int> Ranking::Order() const {
  std::vector<int> order;
  order.reserve(size());
  for (const auto& tier : tiers_) {
    order.insert(order.end(), tier.begin(), tier.end());
  }
  return order;
}

std::vector<PairPreference> Ranking::ImpliedComparisons() const {
  std::vector<PairPreference> pairs;
  for (size_t a = 0; a < tiers_.size(); ++a) {
    for (size_t b = a + 1; b < tiers_.size(); ++b) {
      for (int winner : tiers_[a]) {
        for (int loser : tiers_[b]) pairs.push_back({winner, loser});
      }
    }
  }
  return pairs;
}

std::vector<PairPreference> Voter::Comparisons() const {
  if (HasRanking()) return ranking().ImpliedComparisons();
  return std::get<std::vector<PairPreference>>(preference);
}

PreferenceProfile::PreferenceProfile(CandidateSet candidates,
                                     std::vector<Voter> voters)
    : candidates_(std::move(candidates)), voters_(std::move(voters)) {
  if (voters_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a profile needs at least one voter");
  }
  const int n = candidates_.size();
  bool complete = true;
  for (const Voter& voter : voters_) {
    if (voter.HasRanking()) {
      const Ranking& ranking = voter.ranking();
      if (ranking.size() != n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "voter '" + voter.id + "' ranks " +
                        std::to_string(ranking.size()) + " of " +
                        std::to_string(n) + " candidates");
      }
      if (!ranking.IsStrict()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "voter '" + voter.id + "' has ties in a ballot");
      }
      continue;
    }
    complete = false;
    std::set<std::pair<int, int>> pairs;
    for (const PairPreference& p :
         std::get<std::vector<PairPreference>>(voter.preference)) {
      if (p.winner < 0 || p.winner >= n || p.loser < 0 || p.loser >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "voter '" + voter.id + "' compares an unknown candidate");
      }
      if (p.winner == p.loser) {
        throw Error(ErrorCode::kInvalidArgument,
                    "voter '" + voter.id + "' compares a candidate with itself");
      }
      auto key = std::minmax(p.winner, p.loser);
      if (!pairs.insert({key.first, key.second}).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "voter '" + voter.id + "' judges pair " +
                        PairName(key.first, key.second) + " twice");
      }
    }
  }
  kind_ = complete ? ProfileKind::kComplete : ProfileKind::kGeneralized;
}

PreferenceProfile PreferenceProfile::FromRankings(
    int n, const std::vector<std::vector<int>>& orders) {
  std::vector<Voter> voters;
  voters.reserve(orders.size());
  for (size_t v = 0; v < orders.size(); ++v) {
    if (!IsPermutation(orders[v], n)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ballot " + std::to_string(v + 1) + " is not a permutation");
    }
    voters.push_back({"v" + std::to_string(v + 1), Ranking::Strict(orders[v])});
  }
  return PreferenceProfile(CandidateSet::Numbered(n), std::move(voters));
}

std::vector<Comparison> PreferenceProfile::AllComparisons() const {
  std::vector<Comparison> all;
  for (int v = 0; v < num_voters(); ++v) {
    for (const PairPreference& p : voters_[v].Comparisons()) {
      all.push_back({v, p.winner, p.loser});
    }
  }
  return all;
}

PreferenceProfile PreferenceProfile::Subprofile(
    std::span<const int> voter_indices) const {
  std::vector<Voter> chosen;
  chosen.reserve(voter_indices.size());
  for (int v : voter_indices) chosen.push_back(voters_.at(v));
  return PreferenceProfile(candidates_, std::move(chosen));
}

PairwiseTally PairwiseTally::FromWins(RationalMatrix wins) {
  const int n = static_cast<int>(wins.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(wins[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "win matrix is not square");
    }
    if (wins[i][i] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-zero diagonal in win matrix");
    }
    for (int j = 0; j < n; ++j) {
      if (wins[i][j] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "negative win count");
      }
    }
  }
  return PairwiseTally(std::move(wins));
}

PairwiseTally PairwiseTally::FromProportions(const RationalMatrix& props) {
  const int n = static_cast<int>(props.size());
  RationalMatrix wins = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(props[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "proportion matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (props[i][j] < 0 || props[i][j] > 1 ||
          props[i][j] + props[j][i] != 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "proportions on pair " + PairName(i, j) +
                        " must lie in [0, 1] and sum to one");
      }
      wins[i][j] = props[i][j];
    }
  }
  return PairwiseTally(std::move(wins));
}

bool PairwiseTally::AllPairsDefined() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!Defined(i, j)) return false;
    }
  }
  return true;
}

Rational PairwiseTally::Prop(int i, int j) const {
  Rational t = total(i, j);
  if (i == j || t == 0) {
    throw Error(ErrorCode::kUndefinedPair,
                "no comparisons on pair " + PairName(i, j));
  }
  return wins_[i][j] / t;
}

std::optional<Rational> PairwiseTally::TryProp(int i, int j) const {
  if (!Defined(i, j)) return std::nullopt;
  return wins_[i][j] / total(i, j);
}

void PairwiseTally::RequireAllPairs() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!Defined(i, j)) {
        throw Error(ErrorCode::kUndefinedPair,
                    "no comparisons on pair " + PairName(i, j));
      }
    }
  }
}

PairwiseTally Tally(const PreferenceProfile& profile) {
  const int n = profile.num_candidates();
  std::vector<std::vector<long long>> counts(n, std::vector<long long>(n, 0));
  for (const Voter& voter : profile.voters()) {
    for (const PairPreference& p : voter.Comparisons()) {
      ++counts[p.winner][p.loser];
    }
  }
  RationalMatrix wins = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) wins[i][j] = counts[i][j];
  }
  return PairwiseTally::FromWins(std::move(wins));
}

Duel MajorityRelation::at(int i, int j) const {
  Duel d = outcome_.at(i).at(j);
  if (d == Duel::kUndefined) {
    throw Error(ErrorCode::kUndefinedPair,
                "majority undefined on pair " + PairName(i, j));
  }
  return d;
}

bool MajorityRelation::IsComplete() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && outcome_[i][j] == Duel::kUndefined) return false;
    }
  }
  return true;
}

MajorityRelation ComputeMajorityRelation(const PairwiseTally& tally,
                                         MajorityTiePolicy policy) {
  const int n = tally.size();
  const Rational half(1, 2);
  std::vector<std::vector<Duel>> outcome(n, std::vector<Duel>(n, Duel::kTie));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::optional<Rational> p = tally.TryProp(i, j);
      if (!p) {
        outcome[i][j] = Duel::kUndefined;
      } else if (*p > half) {
        outcome[i][j] = Duel::kWin;
      } else if (*p < half) {
        outcome[i][j] = Duel::kLose;
      } else {
        if (policy == MajorityTiePolicy::kStrictOnly) {
          throw Error(ErrorCode::kUnexpectedTie,
                      "exact majority tie on pair " + PairName(i, j));
        }
        outcome[i][j] = Duel::kTie;
      }
    }
  }
  return MajorityRelation(std::move(outcome));
}

std::optional<std::vector<int>> FindCondorcetCycle(
    const MajorityRelation& relation) {
  if (!relation.IsComplete()) {
    throw Error(ErrorCode::kIncompleteRelation,
                "majority relation has undefined pairs");
  }
  const int n = relation.size();
  std::optional<std::vector<int>> best;
  // BFS from each start finds the shortest cycle through it; the first start
  // reaching the global minimum length is the smallest vertex on that cycle.
  for (int start = 0; start < n; ++start) {
    std::vector<int> parent(n, -1);
    std::vector<int> dist(n, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    std::optional<std::vector<int>> found;
    while (!queue.empty() && !found) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (u == v || relation.RawAt(u, v) != Duel::kWin) continue;
        if (v == start) {
          std::vector<int> cycle;
          for (int w = u; w != -1; w = parent[w]) cycle.push_back(w);
          std::reverse(cycle.begin(), cycle.end());
          found = std::move(cycle);
          break;
        }
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (found && (!best || found->size() < best->size())) best = found;
  }
  return best;
}

bool IsTransitive(std::span<const PairPreference> comparisons, int n) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const PairPreference& p : comparisons) {
    out.at(p.winner).push_back(p.loser);
    ++indegree.at(p.loser);
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v : out[u]) {
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  return removed == n;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finalizer over a combined state.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PreferenceProfile GenerateComplete(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 2 and m >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> orders(m, std::vector<int>(n));
  for (auto& order : orders) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return PreferenceProfile::FromRankings(n, orders);
}

namespace {

PreferenceProfile ProfileFromLabelerComparisons(
    int n, const std::vector<std::vector<PairPreference>>& by_labeler) {
  std::vector<Voter> voters;
  for (size_t k = 0; k < by_labeler.size(); ++k) {
    if (by_labeler[k].empty()) continue;
    voters.push_back({"v" + std::to_string(k + 1), by_labeler[k]});
  }
  return PreferenceProfile(CandidateSet::Numbered(n), std::move(voters));
}

}  // namespace

PreferenceProfile GenerateAssumption1(int n, std::uint64_t seed,
                                      TournamentModel model,
                                      int num_labelers) {
  if (n < 2 || num_labelers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 2 and a labeler");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> labeler(0, num_labelers - 1);

  std::vector<int> latent_position(n);
  if (const auto* latent = std::get_if<FromLatentRanking>(&model)) {
    if (latent->noise < 0.0 || latent->noise > 1.0) {
      throw Error(ErrorCode::kInvalidArgument, "noise must lie in [0, 1]");
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int pos = 0; pos < n; ++pos) latent_position[order[pos]] = pos;
  }

  std::vector<std::vector<PairPreference>> by_labeler(num_labelers);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool i_wins;
      if (const auto* latent = std::get_if<FromLatentRanking>(&model)) {
        i_wins = latent_position[i] < latent_position[j];
        if (unit(rng) < latent->noise) i_wins = !i_wins;
      } else {
        i_wins = unit(rng) < 0.5;
      }
      PairPreference p = i_wins ? PairPreference{i, j} : PairPreference{j, i};
      by_labeler[labeler(rng)].push_back(p);
    }
  }
  return ProfileFromLabelerComparisons(n, by_labeler);
}

PreferenceProfile TournamentFromMask(int n, std::uint64_t mask) {
  if (n < 2 || n * (n - 1) / 2 > 63) {
    throw Error(ErrorCode::kInvalidArgument, "tournament size out of range");
  }
  std::vector<PairPreference> comparisons;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      bool i_wins = (mask >> bit) & 1ULL;
      comparisons.push_back(i_wins ? PairPreference{i, j}
                                   : PairPreference{j, i});
    }
  }
  return ProfileFromLabelerComparisons(n, {comparisons});
}

std::vector<int> Transposition(int n, int i, int j) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm.at(i), perm.at(j));
  return perm;
}

Ranking ApplyPermutation(const Ranking& ranking, std::span<const int> perm) {
  if (!IsPermutation(perm, ranking.size())) {
    throw Error(ErrorCode::kInvalidArgument, "not a permutation");
  }
  std::vector<std::vector<int>> tiers = ranking.tiers();
  for (auto& tier : tiers) {
    for (int& c : tier) c = perm[c];
    std::sort(tier.begin(), tier.end());
  }
  return Ranking::FromTiers(std::move(tiers));
}

PairwiseTally ApplyPermutation(const PairwiseTally& tally,
                               std::span<const int> perm) {
  const int n = tally.size();
  if (!IsPermutation(perm, n)) {
    throw Error(ErrorCode::kInvalidArgument, "not a permutation");
  }
  RationalMatrix wins = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) wins[perm[i]][perm[j]] = tally.wins(i, j);
  }
  return PairwiseTally::FromWins(std::move(wins));
}

PreferenceProfile ApplyPermutation(const PreferenceProfile& profile,
                                   std::span<const int> perm) {
  if (!IsPermutation(perm, profile.num_candidates())) {
    throw Error(ErrorCode::kInvalidArgument, "not a permutation");
  }
  std::vector<Voter> voters;
  voters.reserve(profile.num_voters());
  for (const Voter& voter : profile.voters()) {
    if (voter.HasRanking()) {
      std::vector<int> order = voter.ranking().Order();
      for (int& c : order) c = perm[c];
      voters.push_back({voter.id, Ranking::Strict(std::move(order))});
    } else {
      std::vector<PairPreference> pairs =
          std::get<std::vector<PairPreference>>(voter.preference);
      for (PairPreference& p : pairs) p = {perm[p.winner], perm[p.loser]};
      voters.push_back({voter.id, std::move(pairs)});
    }
  }
  return PreferenceProfile(profile.candidates(), std::move(voters));
}

bool ProfilesEqualAsMultisets(const PreferenceProfile& a,
                              const PreferenceProfile& b) {
  if (a.num_candidates() != b.num_candidates() ||
      a.num_voters() != b.num_voters()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profiles differ in candidate or voter count");
  }
  std::multiset<std::vector<PairPreference>> left, right;
  for (const Voter& v : a.voters()) left.insert(CanonicalPreferenceSet(v));
  for (const Voter& v : b.voters()) right.insert(CanonicalPreferenceSet(v));
  return left == right;
}

}  // namespace prefaxiom

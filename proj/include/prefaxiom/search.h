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

// Counterexample search over indexed spaces of profiles.
//
// Every space maps an index in [0, SpaceSize) to one profile, so a search is
// reproducible from (space, index) alone and independent of worker count.

#ifndef PREFAXIOM_SEARCH_H_
#define PREFAXIOM_SEARCH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prefaxiom/axioms.h"
#include "prefaxiom/profile.h"

namespace prefaxiom {

// Every m-tuple of strict rankings, voter 0 most significant and rankings in
// lexicographic order.
struct ExhaustiveComplete {
  int n = 3;
  int m = 3;
};
struct RandomComplete {
  int n = 3;
  int m = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};
// Random tournaments with comparisons spread over `labelers` labelers.
struct Assumption1Random {
  int n = 4;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int labelers = 1;
};
// All 2^(n(n-1)/2) tournaments, index = orientation mask.
struct Assumption1Exhaustive {
  int n = 4;
};
using SearchSpace = std::variant<ExhaustiveComplete, RandomComplete,
                                 Assumption1Random, Assumption1Exhaustive>;

inline constexpr double kDefaultMaxSpace = 1e7;

// Number of profiles in the space, as a double so oversize spaces can be
// reported without overflow.
double SpaceSize(const SearchSpace& space);
PreferenceProfile ProfileAt(const SearchSpace& space, std::uint64_t index);
std::string DescribeSpace(const SearchSpace& space);

// Accepts "exhaustive-complete:N:M", "random-complete:N:M:TRIALS",
// "assumption1:N" and "assumption1-random:N:TRIALS[:LABELERS]". `seed` feeds
// the random spaces. Throws kInvalidArgument.
SearchSpace ParseSearchSpace(std::string_view text, std::uint64_t seed);

struct SearchOptions {
  CheckOptions check;
  int jobs = 1;
  double max_space = kDefaultMaxSpace;
};

struct Counterexample {
  std::uint64_t index = 0;
  PreferenceProfile profile;
  AxiomReport report;
};

struct SearchResult {
  std::optional<Counterexample> counterexample;
  // Profiles checked up to and including the counterexample.
  std::uint64_t examined = 0;
  // Of those, profiles on which at least one axiom was applicable.
  std::uint64_t applicable = 0;
};

// First index at which any of `axioms` is violated. Throws kSpaceTooLarge
// when the space exceeds `options.max_space`.
SearchResult CounterexampleSearch(const RuleUnderTest& rule,
                                  std::span<const AxiomId> axioms,
                                  const SearchSpace& space,
                                  const SearchOptions& options = {});
inline SearchResult CounterexampleSearch(const RuleUnderTest& rule,
                                         AxiomId axiom,
                                         const SearchSpace& space,
                                         const SearchOptions& options = {}) {
  return CounterexampleSearch(rule, std::span<const AxiomId>(&axiom, 1), space,
                              options);
}

// Frequency of profiles without a Condorcet winner among random complete
// profiles with n candidates and m voters. Trial t of size n draws from
// DeriveSeed(DeriveSeed(seed, n), t).
struct CycleFrequency {
  std::uint64_t trials = 0;
  std::uint64_t without_winner = 0;

  double frequency() const {
    return trials ? static_cast<double>(without_winner) / trials : 0.0;
  }
  // Binomial standard error of frequency().
  double standard_error() const;
};
CycleFrequency EstimateNoCondorcetWinner(int n, int m, std::uint64_t trials,
                                         std::uint64_t seed, int jobs = 1);

// Exact share over ExhaustiveComplete(n, m). Throws kSpaceTooLarge beyond
// `max_space` profiles.
Rational ExactNoCondorcetWinner(int n, int m,
                                double max_space = kDefaultMaxSpace);

}  // namespace prefaxiom

#endif  // PREFAXIOM_SEARCH_H_

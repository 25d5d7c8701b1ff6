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

#include "prefaxiom/search.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

constexpr std::uint64_t kChunk = 256;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// The `rank`-th permutation of 0..n-1 in lexicographic order.
std::vector<int> NthPermutation(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = Factorial(k - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

void RequireCandidates(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "search spaces need n >= 2");
  }
}

std::uint64_t ParseNumber(std::string_view field, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      field.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad number '" + std::string(field) + "' in search space '" +
                    std::string(text) + "'");
  }
  return value;
}

struct ChunkResult {
  std::uint64_t applicable = 0;
  std::optional<std::uint64_t> hit;
  std::optional<AxiomReport> report;
  std::exception_ptr error;
};

}  // namespace

double SpaceSize(const SearchSpace& space) {
  return std::visit(
      Overloaded{
          [](const ExhaustiveComplete& s) {
            return std::pow(static_cast<double>(Factorial(s.n)), s.m);
          },
          [](const RandomComplete& s) { return static_cast<double>(s.trials); },
          [](const Assumption1Random& s) {
            return static_cast<double>(s.trials);
          },
          [](const Assumption1Exhaustive& s) {
            return std::pow(2.0, s.n * (s.n - 1) / 2);
          },
      },
      space);
}

PreferenceProfile ProfileAt(const SearchSpace& space, std::uint64_t index) {
  return std::visit(
      Overloaded{
          [&](const ExhaustiveComplete& s) {
            RequireCandidates(s.n);
            const std::uint64_t base = Factorial(s.n);
            std::vector<std::vector<int>> orders(s.m);
            for (int v = s.m - 1; v >= 0; --v) {
              orders[v] = NthPermutation(s.n, index % base);
              index /= base;
            }
            return PreferenceProfile::FromRankings(s.n, orders);
          },
          [&](const RandomComplete& s) {
            RequireCandidates(s.n);
            return GenerateComplete(s.n, s.m, DeriveSeed(s.seed, index));
          },
          [&](const Assumption1Random& s) {
            RequireCandidates(s.n);
            return GenerateAssumption1(s.n, DeriveSeed(s.seed, index),
                                       RandomTournament{}, s.labelers);
          },
          [&](const Assumption1Exhaustive& s) {
            RequireCandidates(s.n);
            return TournamentFromMask(s.n, index);
          },
      },
      space);
}

std::string DescribeSpace(const SearchSpace& space) {
  auto num = [](auto v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const ExhaustiveComplete& s) {
            return "exhaustive-complete:" + num(s.n) + ":" + num(s.m);
          },
          [&](const RandomComplete& s) {
            return "random-complete:" + num(s.n) + ":" + num(s.m) + ":" +
                   num(s.trials);
          },
          [&](const Assumption1Random& s) {
            return "assumption1-random:" + num(s.n) + ":" + num(s.trials) +
                   ":" + num(s.labelers);
          },
          [&](const Assumption1Exhaustive& s) {
            return "assumption1:" + num(s.n);
          },
      },
      space);
}

SearchSpace ParseSearchSpace(std::string_view text, std::uint64_t seed) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto arg = [&](std::size_t k) {
    return ParseNumber(parts[k], text);
  };
  auto as_int = [&](std::size_t k) {
    const std::uint64_t v = arg(k);
    if (v > 1000) {
      throw Error(ErrorCode::kInvalidArgument,
                  "size field out of range in '" + std::string(text) + "'");
    }
    return static_cast<int>(v);
  };
  const std::string_view kind = parts[0];
  const std::size_t fields = parts.size() - 1;
  if (kind == "exhaustive-complete" && fields == 2) {
    return ExhaustiveComplete{as_int(1), as_int(2)};
  }
  if (kind == "random-complete" && fields == 3) {
    return RandomComplete{as_int(1), as_int(2), arg(3), seed};
  }
  if (kind == "assumption1" && fields == 1) {
    return Assumption1Exhaustive{as_int(1)};
  }
  if (kind == "assumption1-random" && (fields == 2 || fields == 3)) {
    return Assumption1Random{as_int(1), arg(2), seed,
                             fields == 3 ? as_int(3) : 1};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unrecognized search space '" + std::string(text) + "'");
}

SearchResult CounterexampleSearch(const RuleUnderTest& rule,
                                  std::span<const AxiomId> axioms,
                                  const SearchSpace& space,
                                  const SearchOptions& options) {
  const double size = SpaceSize(space);
  if (size > options.max_space) {
    throw Error(ErrorCode::kSpaceTooLarge,
                DescribeSpace(space) + " holds " + std::to_string(size) +
                    " profiles, above the limit of " +
                    std::to_string(options.max_space));
  }
  if (axioms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no axioms to check");
  }
  const auto total = static_cast<std::uint64_t>(size);
  const std::uint64_t num_chunks = (total + kChunk - 1) / kChunk;
  std::vector<ChunkResult> chunks(num_chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_stop{num_chunks};

  auto worker = [&]() {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= num_chunks || c > first_stop.load()) return;
      ChunkResult& result = chunks[c];
      const std::uint64_t end = std::min(total, (c + 1) * kChunk);
      try {
        for (std::uint64_t index = c * kChunk; index < end; ++index) {
          const PreferenceProfile profile = ProfileAt(space, index);
          bool applicable = false;
          for (AxiomId axiom : axioms) {
            AxiomReport report =
                EvaluateAxiom(rule, axiom, profile, options.check);
            applicable = applicable || report.applicable;
            if (report.violated()) {
              result.hit = index;
              result.report = std::move(report);
              break;
            }
          }
          if (applicable) ++result.applicable;
          if (result.hit) break;
        }
      } catch (...) {
        result.error = std::current_exception();
      }
      if (result.hit || result.error) {
        std::uint64_t seen = first_stop.load();
        while (c < seen && !first_stop.compare_exchange_weak(seen, c)) {
        }
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }

  SearchResult out;
  for (std::uint64_t c = 0; c < num_chunks; ++c) {
    const ChunkResult& result = chunks[c];
    if (result.error) std::rethrow_exception(result.error);
    out.applicable += result.applicable;
    if (result.hit) {
      out.examined = *result.hit + 1;
      out.counterexample =
          Counterexample{*result.hit, ProfileAt(space, *result.hit),
                         *result.report};
      return out;
    }
  }
  out.examined = total;
  return out;
}

double CycleFrequency::standard_error() const {
  if (trials == 0) return 0.0;
  const double p = frequency();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

CycleFrequency EstimateNoCondorcetWinner(int n, int m, std::uint64_t trials,
                                         std::uint64_t seed, int jobs) {
  RequireCandidates(n);
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one voter");
  const std::uint64_t base = DeriveSeed(seed, static_cast<std::uint64_t>(n));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> hits{0};
  auto worker = [&]() {
    std::uint64_t local = 0;
    while (true) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= trials) break;
      const std::uint64_t end = std::min(trials, start + kChunk);
      for (std::uint64_t t = start; t < end; ++t) {
        const PairwiseTally tally =
            Tally(GenerateComplete(n, m, DeriveSeed(base, t)));
        if (!CondorcetWinner(tally)) ++local;
      }
    }
    hits += local;
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int k = 0; k < workers; ++k) threads.emplace_back(worker);
  }
  return {trials, hits.load()};
}

Rational ExactNoCondorcetWinner(int n, int m, double max_space) {
  const ExhaustiveComplete space{n, m};
  const double size = SpaceSize(space);
  if (size > max_space) {
    throw Error(ErrorCode::kSpaceTooLarge,
                DescribeSpace(space) + " is too large to enumerate");
  }
  const auto total = static_cast<std::uint64_t>(size);
  std::uint64_t count = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    if (!CondorcetWinner(Tally(ProfileAt(space, index)))) ++count;
  }
  return Rational(count) / total;
}

}  // namespace prefaxiom

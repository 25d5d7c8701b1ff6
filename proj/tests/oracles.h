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

// Independent reference computations used by the tests. Nothing here calls
// into the library's tally, score or solver code; inputs are plain vectors.

#ifndef PREFAXIOM_TESTS_ORACLES_H_
#define PREFAXIOM_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Orders = std::vector<std::vector<int>>;
using IntMatrix = std::vector<std::vector<long>>;

// wins[i][j] = number of voters placing i above j.
inline IntMatrix CountWins(const Orders& orders, int n) {
  IntMatrix wins(n, std::vector<long>(n, 0));
  for (const auto& order : orders) {
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && pos[i] < pos[j]) ++wins[i][j];
      }
    }
  }
  return wins;
}

// Positional Borda: n-1-position points per ballot.
inline std::vector<long> PositionalBorda(const Orders& orders, int n) {
  std::vector<long> points(n, 0);
  for (const auto& order : orders) {
    for (int k = 0; k < n; ++k) points[order[k]] += n - 1 - k;
  }
  return points;
}

// Twice the Copeland score, so half points stay integral.
inline std::vector<long> DoubledCopeland(const IntMatrix& wins) {
  const int n = static_cast<int>(wins.size());
  std::vector<long> score(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (wins[i][j] > wins[j][i]) score[i] += 2;
      if (wins[i][j] == wins[j][i]) score[i] += 1;
    }
  }
  return score;
}

inline std::optional<int> CondorcetWinner(const IntMatrix& wins) {
  const int n = static_cast<int>(wins.size());
  for (int i = 0; i < n; ++i) {
    bool beats_all = true;
    for (int j = 0; j < n && beats_all; ++j) {
      if (i != j && wins[i][j] <= wins[j][i]) beats_all = false;
    }
    if (beats_all) return i;
  }
  return std::nullopt;
}

// Tiers of equal values, descending, each tier in index order.
template <class T>
std::vector<std::vector<int>> GroupDescending(const std::vector<T>& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  std::vector<std::vector<int>> tiers;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || values[idx[k]] != values[idx[k - 1]]) tiers.emplace_back();
    tiers.back().push_back(idx[k]);
  }
  for (auto& t : tiers) std::sort(t.begin(), t.end());
  return tiers;
}

// Brute force over all permutations: the unique order agreeing with every
// strict majority, if the majority relation is a strict linear order.
inline std::optional<std::vector<int>> MajorityOrder(const IntMatrix& wins) {
  const int n = static_cast<int>(wins.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        ok = wins[perm[a]][perm[b]] > wins[perm[b]][perm[a]];
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Tournament wins matrix for the mask convention: bit k of the k-th pair
// (i<j, lexicographic) set means i beats j.
inline IntMatrix TournamentWins(int n, std::uint64_t mask) {
  IntMatrix wins(n, std::vector<long>(n, 0));
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1u) {
        wins[i][j] = 1;
      } else {
        wins[j][i] = 1;
      }
    }
  }
  return wins;
}

// Exact count of m-voter profiles over n candidates with no Condorcet winner,
// by nested enumeration of permutations. Returns {count, total}.
inline std::pair<long, long> EnumerateNoCondorcetWinner(int n, int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  long count = 0;
  long total = 0;
  std::vector<std::size_t> digit(m, 0);
  while (true) {
    Orders orders;
    for (int v = 0; v < m; ++v) orders.push_back(perms[digit[v]]);
    ++total;
    if (!CondorcetWinner(CountWins(orders, n))) ++count;
    int v = m - 1;
    while (v >= 0 && ++digit[v] == perms.size()) digit[v--] = 0;
    if (v < 0) break;
  }
  return {count, total};
}

inline double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Plain weighted logistic loss straight from its definition.
inline double Loss(const std::vector<std::vector<double>>& w,
                   const std::vector<double>& r) {
  double loss = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (i != j && w[i][j] > 0) loss -= w[i][j] * std::log(Sigmoid(r[i] - r[j]));
    }
  }
  return loss;
}

// Central differences of f at x with step h.
inline std::vector<double> FiniteDifferenceGradient(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x, double h) {
  std::vector<double> grad(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<double> up = x;
    std::vector<double> down = x;
    up[k] += h;
    down[k] -= h;
    grad[k] = (f(up) - f(down)) / (2.0 * h);
  }
  return grad;
}

// Root of a continuous f on [lo, hi] with a sign change, by bisection.
inline double Bisect(const std::function<double(double)>& f, double lo,
                     double hi, int iterations = 200) {
  double flo = f(lo);
  for (int k = 0; k < iterations; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// For the profile {2 x A>B>C, B>C>A, C>A>B}: the standard MLE has rewards
// (s, 0, -s) with sigma(s) + sigma(2s) = 5/4 (the Borda score of A). Returns
// the softmax of those rewards.
inline std::vector<double> FourVoterMleDistribution() {
  const double s = Bisect(
      [](double x) { return Sigmoid(x) + Sigmoid(2 * x) - 1.25; }, 0.0, 5.0);
  const double z = std::exp(s) + 1.0 + std::exp(-s);
  return {std::exp(s) / z, 1.0 / z, std::exp(-s) / z};
}

inline std::vector<double> Softmax(const std::vector<double>& r) {
  const double top = *std::max_element(r.begin(), r.end());
  std::vector<double> p(r.size());
  double z = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) z += p[k] = std::exp(r[k] - top);
  for (double& v : p) v /= z;
  return p;
}

inline std::vector<double> Centered(std::vector<double> r) {
  const double mean = std::accumulate(r.begin(), r.end(), 0.0) / r.size();
  for (double& v : r) v -= mean;
  return r;
}

}  // namespace oracle

#endif  // PREFAXIOM_TESTS_ORACLES_H_

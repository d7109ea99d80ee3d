// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divgreedy/brute_force.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace divgreedy {
namespace {

void RequireGround(int n, int cap, const char* who) {
  if (n > cap) {
    throw std::invalid_argument(std::string(who) + ": ground set too large (" +
                                std::to_string(n) + " > " +
                                std::to_string(cap) + ")");
  }
}

// Feasible alpha-approximation masks in increasing order. With a zero
// threshold the objective is never consulted.
std::vector<std::uint32_t> ApproximationMasks(const ValueOracle& f,
                                              const IndependenceOracle& c,
                                              const Alpha& alpha) {
  const int n = c.ground_size();
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> feasible;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if (c.IsIndependent(Solution::FromMask(n, m))) feasible.push_back(m);
  }
  if (alpha.num == 0) return feasible;
  std::int64_t opt = 0;
  std::vector<std::int64_t> values(feasible.size());
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    values[i] = f.Value(Solution::FromMask(n, feasible[i]));
    opt = std::max(opt, values[i]);
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    if (alpha.Admits(values[i], opt)) out.push_back(feasible[i]);
  }
  return out;
}

}  // namespace

OptimumResult ExactOptimum(const ValueOracle& f, const IndependenceOracle& c,
                           const OracleLimits& limits) {
  const int n = c.ground_size();
  RequireGround(n, limits.max_ground, "ExactOptimum");
  OptimumResult best{0, Solution(n)};
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t m = 0; m < limit; ++m) {
    const Solution x = Solution::FromMask(n, m);
    if (!c.IsIndependent(x)) continue;
    const std::int64_t value = f.Value(x);
    if (value > best.value) best = {value, x};
  }
  return best;
}

DiverseOptimumResult ExactDiverseOptimum(const ValueOracle& f,
                                         const IndependenceOracle& c, int r,
                                         const Alpha& alpha,
                                         const OracleLimits& limits) {
  const int n = c.ground_size();
  RequireGround(n, limits.max_diverse_ground, "ExactDiverseOptimum");
  if (r > limits.max_r) {
    throw std::invalid_argument("ExactDiverseOptimum: multiset size too large");
  }
  DiverseOptimumResult best;
  if (r < 1) return best;
  const std::vector<std::uint32_t> pool = ApproximationMasks(f, c, alpha);
  if (pool.empty()) return best;  // only possible when nothing is feasible

  const std::size_t a = pool.size();
  std::vector<std::vector<int>> dist(a, std::vector<int>(a));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      dist[i][j] = std::popcount(pool[i] ^ pool[j]);
    }
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
  std::int64_t best_sum = -1;
  std::vector<std::size_t> best_pick;
  // Depth-first over nondecreasing index tuples.
  const auto descend = [&](auto&& self, int depth, std::size_t from,
                           std::int64_t partial) -> void {
    if (depth == r) {
      if (partial > best_sum) {
        best_sum = partial;
        best_pick = pick;
      }
      return;
    }
    for (std::size_t i = from; i < a; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      std::int64_t grown = partial;
      for (int d = 0; d < depth; ++d) grown += dist[pick[static_cast<std::size_t>(d)]][i];
      self(self, depth + 1, i, grown);
    }
  };
  descend(descend, 0, 0, 0);

  best.distance_sum = best_sum;
  for (std::size_t i : best_pick) {
    best.witness.push_back(Solution::FromMask(n, pool[i]));
  }
  return best;
}

int DisjointApproxCount(const ValueOracle& f, const IndependenceOracle& c,
                        const Alpha& alpha, const OracleLimits& limits) {
  const int n = c.ground_size();
  RequireGround(n, limits.max_ground, "DisjointApproxCount");
  const std::uint32_t limit = 1u << n;
  std::vector<bool> candidate(limit, false);
  for (std::uint32_t m : ApproximationMasks(f, c, alpha)) {
    if (m != 0) candidate[m] = true;
  }
  // d[mask] = best packing of candidates inside mask. The lowest element of
  // mask is either unused or covered by the candidate containing it.
  std::vector<int> d(limit, 0);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    int best = d[mask ^ low];
    for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
      if ((s & low) != 0 && candidate[s]) best = std::max(best, 1 + d[mask ^ s]);
    }
    d[mask] = best;
  }
  return d[limit - 1];
}

int MinDependentSetSize(const IndependenceOracle& c,
                        const OracleLimits& limits) {
  const int n = c.ground_size();
  RequireGround(n, limits.max_ground, "MinDependentSetSize");
  int best = n + 1;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t m = 1; m < limit; ++m) {
    if (std::popcount(m) >= best) continue;
    if (!c.IsIndependent(Solution::FromMask(n, m))) best = std::popcount(m);
  }
  return best;
}

int MaxFeasibleSize(const IndependenceOracle& c, const OracleLimits& limits) {
  const int n = c.ground_size();
  RequireGround(n, limits.max_ground, "MaxFeasibleSize");
  int best = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t m = 1; m < limit; ++m) {
    if (std::popcount(m) <= best) continue;
    if (c.IsIndependent(Solution::FromMask(n, m))) best = std::popcount(m);
  }
  return best;
}

std::int64_t MaxValueUpToSize(const ValueOracle& f, int k,
                              const OracleLimits& limits) {
  const UniformMatroid cap(f.ground_size(), k);
  return ExactOptimum(f, cap, limits).value;
}

SolutionMultiset CyclicUniformFixture(int n, int s, int r) {
  if (s < 1 || s > n) {
    throw std::invalid_argument("CyclicUniformFixture: s outside [1, n]");
  }
  SolutionMultiset p(n, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      const int v = static_cast<int>(
          (static_cast<std::int64_t>(i) * s + j) % n);
      if (!p.solution(i).contains(v)) p.Insert(i, v);
    }
  }
  return p;
}

ModularObjective ModularDecreasingFixture(int n) {
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = n - i;
  return ModularObjective(std::move(weights));
}

PartitionMatroid TailBlockMatroid(int n, int s) {
  if (s < 1 || s > n) {
    throw std::invalid_argument("TailBlockMatroid: s outside [1, n]");
  }
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < s; ++v) block_of[static_cast<std::size_t>(v)] = v;
  std::vector<int> caps(static_cast<std::size_t>(s), 1);
  return PartitionMatroid(std::move(block_of), std::move(caps));
}

}  // namespace divgreedy

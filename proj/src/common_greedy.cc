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

#include "divgreedy/common_greedy.h"

#include <array>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "divgreedy/diversity.h"

namespace divgreedy {
namespace {

struct Candidate {
  int element;
  std::int64_t gain;
};

// Feasible extensions of z with their marginal gains. One independence call
// per element outside z, one value call per feasible element.
std::vector<Candidate> BuildRow(const Matroid& m, const Solution& z,
                                const ValueOracle::Incremental& inc) {
  std::vector<Candidate> row;
  Solution probe = z;
  for (int u = 0; u < m.ground_size(); ++u) {
    if (z.contains(u)) continue;
    probe.Insert(u);
    if (m.IsIndependent(probe)) row.push_back({u, inc.GainOf(u)});
    probe.Erase(u);
  }
  return row;
}

}  // namespace

GreedyResult RunCommonGreedy(const ValueOracle& f, const Matroid& m,
                             const CommonGreedyConfig& cfg) {
  const int n = m.ground_size();
  const int b = cfg.common_elements;
  const int r = cfg.multiset_size;
  if (r < 2) throw std::invalid_argument("RunCommonGreedy: multiset_size < 2");
  if (b < 0 || b > RankOf(m)) {
    throw std::invalid_argument(
        "RunCommonGreedy: common_elements outside [0, rank]");
  }

  RunTrace trace;
  Solution x(n);
  auto prefix_inc = f.MakeIncremental();

  // Phase 1: classical greedy prefix, ties to the smallest element id.
  while (x.size() < b) {
    int best = -1;
    std::int64_t best_gain = 0;
    Solution probe = x;
    for (int u = 0; u < n; ++u) {
      if (x.contains(u)) continue;
      probe.Insert(u);
      if (m.IsIndependent(probe)) {
        const std::int64_t gain = prefix_inc->GainOf(u);
        if (best == -1 || gain > best_gain) {
          best = u;
          best_gain = gain;
        }
      }
      probe.Erase(u);
    }
    if (best == -1) break;  // no feasible extension left
    x.Insert(best);
    prefix_inc->Add(best);
    trace.steps.push_back(
        {1, -1, best, 0, 0, {prefix_inc->value()}});
  }
  trace.phase1 = x;

  // Phase 2: r indexed copies of x, diversified.
  SolutionMultiset p = SolutionMultiset::Replicate(x, r);
  std::vector<std::unique_ptr<ValueOracle::Incremental>> incs;
  incs.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) incs.push_back(prefix_inc->Clone());

  std::vector<std::vector<Candidate>> rows(static_cast<std::size_t>(r));
  rows[0] = BuildRow(m, x, *incs[0]);  // identical copies share one build
  for (int i = 1; i < r; ++i) rows[static_cast<std::size_t>(i)] = rows[0];

  const int rep_cap = (r + 1) / 2;  // ceil(r/2), keeps the distance sum rising
  std::int64_t distance_sum = 0;

  for (;;) {
    int best_i = -1;
    int best_v = -1;
    std::array<std::int64_t, 4> best_key{};
    for (int i = 0; i < r; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      const auto kappa = static_cast<std::int64_t>(row.size());
      const std::int64_t value = incs[static_cast<std::size_t>(i)]->value();
      for (const Candidate& c : row) {
        const int count = p.count(c.element);
        if (count >= rep_cap || c.gain < 0) continue;
        const std::array<std::int64_t, 4> key{count, kappa, value, -c.gain};
        if (best_i == -1 || key < best_key) {
          best_i = i;
          best_v = c.element;
          best_key = key;
        }
      }
    }
    if (best_i == -1) break;

    const int count_before = p.count(best_v);
    p.Insert(best_i, best_v);
    incs[static_cast<std::size_t>(best_i)]->Add(best_v);
    distance_sum += DiversityDelta(r, count_before);
    rows[static_cast<std::size_t>(best_i)] =
        BuildRow(m, p.solution(best_i), *incs[static_cast<std::size_t>(best_i)]);

    TraceStep step{2, best_i, best_v, count_before, distance_sum, {}};
    step.values_after.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      step.values_after.push_back(incs[static_cast<std::size_t>(i)]->value());
    }
    trace.steps.push_back(std::move(step));
  }

  return GreedyResult{std::move(p), std::move(trace)};
}

bool CheckUniformExactDiversity(const SolutionMultiset& p, int k_cap, int b) {
  return PairwiseDistanceSum(p) ==
         MaxDistanceSum(p.ground_size() - b, k_cap - b, p.multiset_size());
}

bool CheckMatroidDiversityFloor(const SolutionMultiset& p, const Matroid& m,
                                const Solution& phase1, int b) {
  const int rank = RankOf(m);
  const Solution closure = ClosureOf(m, phase1);
  const std::int64_t outside = m.ground_size() - closure.size();
  const std::int64_t spread = std::max<std::int64_t>(outside - rank + b + 1, 0);
  const std::int64_t r = p.multiset_size();
  const std::int64_t floor = MaxDistanceSum(rank - b - 1, rank - b - 1, r) +
                             MaxDistanceSum(spread, 1, r);
  return PairwiseDistanceSum(p) >= floor;
}

namespace {

__int128 PowI128(std::int64_t base, int exp) {
  __int128 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

bool CheckCommonPrefixObjective(std::int64_t phase1_value, std::int64_t opt,
                                ConstraintKind kind, int rank, int b, int k) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  const int exponent = kind == ConstraintKind::kUniform ? b : std::min(b, k);
  // f(x) >= (1 - (1 - 1/rank)^e) * opt, cross-multiplied by rank^e.
  const __int128 pow_rank = PowI128(rank, exponent);
  const __int128 pow_small = PowI128(rank - 1, exponent);
  if (static_cast<__int128>(phase1_value) * pow_rank <
      (pow_rank - pow_small) * opt) {
    return false;
  }
  if (kind != ConstraintKind::kUniform) {
    // f(x) >= b / (2 * rank) * opt.
    if (static_cast<__int128>(phase1_value) * 2 * rank <
        static_cast<__int128>(b) * opt) {
      return false;
    }
  }
  return true;
}

bool Phase2DiversityNondecreasing(const RunTrace& trace) {
  std::int64_t prev = 0;
  for (const TraceStep& step : trace.steps) {
    if (step.phase != 2) continue;
    if (step.distance_sum_after < prev) return false;
    prev = step.distance_sum_after;
  }
  return true;
}

}  // namespace divgreedy

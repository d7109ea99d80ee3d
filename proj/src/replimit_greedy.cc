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

#include "divgreedy/replimit_greedy.h"

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>
#include <utility>

#include "divgreedy/diversity.h"

namespace divgreedy {
namespace {

struct Candidate {
  int element;
  std::int64_t gain;
};

std::vector<Candidate> BuildRow(const IndependenceOracle& c, const Solution& z,
                                const ValueOracle::Incremental& inc) {
  std::vector<Candidate> row;
  Solution probe = z;
  for (int u = 0; u < c.ground_size(); ++u) {
    if (z.contains(u)) continue;
    probe.Insert(u);
    if (c.IsIndependent(probe)) row.push_back({u, inc.GainOf(u)});
    probe.Erase(u);
  }
  return row;
}

}  // namespace

GreedyResult RunRepLimitGreedy(const ValueOracle& f,
                               const IndependenceOracle& c,
                               const RepLimitConfig& cfg) {
  const int n = c.ground_size();
  const int r = cfg.multiset_size;
  const int l = cfg.rep_limit;
  if (r < 2) throw std::invalid_argument("RunRepLimitGreedy: multiset_size < 2");
  if (l < 1 || l > r) {
    throw std::invalid_argument("RunRepLimitGreedy: rep_limit outside [1, r]");
  }

  // Seed: the feasible singleton of largest value, ties to the smallest id.
  int seed = -1;
  std::int64_t seed_value = 0;
  {
    auto empty_inc = f.MakeIncremental();
    Solution probe(n);
    for (int v = 0; v < n; ++v) {
      probe.Insert(v);
      if (c.IsIndependent(probe)) {
        const std::int64_t value = empty_inc->GainOf(v);
        if (seed == -1 || value > seed_value) {
          seed = v;
          seed_value = value;
        }
      }
      probe.Erase(v);
    }
  }
  if (seed == -1) {
    throw std::invalid_argument(
        "RunRepLimitGreedy: no feasible singleton (constraint has loops)");
  }

  RunTrace trace;
  trace.seed = seed;
  trace.phase1 = Solution::Of(n, {seed});

  SolutionMultiset p = SolutionMultiset::Replicate(trace.phase1, r);
  std::vector<std::unique_ptr<ValueOracle::Incremental>> incs;
  incs.reserve(static_cast<std::size_t>(r));
  auto seed_inc = f.MakeIncremental();
  seed_inc->Add(seed);
  for (int i = 0; i < r; ++i) incs.push_back(seed_inc->Clone());

  std::vector<std::vector<Candidate>> rows(static_cast<std::size_t>(r));
  rows[0] = BuildRow(c, trace.phase1, *incs[0]);
  for (int i = 1; i < r; ++i) rows[static_cast<std::size_t>(i)] = rows[0];

  std::int64_t distance_sum = 0;  // the shared seed contributes nothing

  for (;;) {
    int best_i = -1;
    int best_v = -1;
    std::array<std::int64_t, 4> best_key{};
    for (int i = 0; i < r; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      const std::int64_t size = p.solution(i).size();
      const std::int64_t value = incs[static_cast<std::size_t>(i)]->value();
      for (const Candidate& cand : row) {
        const int count = p.count(cand.element);
        if (count >= l || cand.gain < 0) continue;
        const std::array<std::int64_t, 4> key{size, -cand.gain, value, count};
        if (best_i == -1 || key < best_key) {
          best_i = i;
          best_v = cand.element;
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
        BuildRow(c, p.solution(best_i), *incs[static_cast<std::size_t>(best_i)]);

    TraceStep step{2, best_i, best_v, count_before, distance_sum, {}};
    step.values_after.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      step.values_after.push_back(incs[static_cast<std::size_t>(i)]->value());
    }
    trace.steps.push_back(std::move(step));
  }

  return GreedyResult{std::move(p), std::move(trace)};
}

namespace {

// min{(num_a / den), cap} * lhs >= rhs, exactly:
// picks the smaller of the two factors by cross-multiplication.
bool FactorTimesAtLeast(std::int64_t num_a, std::int64_t den, std::int64_t cap,
                        std::int64_t lhs, std::int64_t rhs) {
  if (num_a <= cap * den) {
    return static_cast<__int128>(lhs) * num_a >=
           static_cast<__int128>(rhs) * den;
  }
  return static_cast<__int128>(lhs) * cap >= rhs;
}

}  // namespace

bool CheckRepLimitUniformGuarantees(const SolutionMultiset& p,
                                    std::int64_t min_value, int k_cap, int l,
                                    int k, std::int64_t best_k) {
  const std::int64_t r = p.multiset_size();
  const std::int64_t n = p.ground_size();
  // min{(r-1)/l + 1, k} * min_value >= best_k.
  if (!FactorTimesAtLeast(r - 1 + l, l, k, min_value, best_k)) return false;
  const std::int64_t h = std::min(r * (k_cap - 1), l * (n - 1));
  const std::int64_t c = h % l;
  return PairwiseDistanceSum(p) >= l * (r - l) * (h / l) + c * (r - c);
}

bool CheckRepLimitMatroidGuarantees(const SolutionMultiset& p,
                                    std::int64_t min_value, int rank, int l,
                                    std::int64_t opt) {
  const std::int64_t r = p.multiset_size();
  if (!FactorTimesAtLeast(r - 1 + 2 * l, l, rank, min_value, opt)) return false;
  return PairwiseDistanceSum(p) >=
         static_cast<std::int64_t>(l) * (r - l) * (rank - 1);
}

bool CheckIntersectionObjectiveGuarantee(const SolutionMultiset& p,
                                         std::int64_t min_value, int k_members,
                                         int l, int max_feasible_size,
                                         std::int64_t opt) {
  const std::int64_t r = p.multiset_size();
  return FactorTimesAtLeast(r - 1 + static_cast<std::int64_t>(k_members + 1) * l,
                            l, max_feasible_size, min_value, opt);
}

bool CheckBenchmarkGuarantee(const SolutionMultiset& p, std::int64_t min_value,
                             std::span<const Solution> y_sets,
                             const ValueOracle& f, const IndependenceOracle& c,
                             ConstraintKind kind, int k_cap_or_members, int l) {
  if (y_sets.empty()) return true;
  std::vector<int> counts(static_cast<std::size_t>(p.ground_size()), 0);
  std::int64_t sum_sizes = 0;
  std::int64_t sum_values = 0;
  for (const Solution& y : y_sets) {
    if (!c.IsIndependent(y)) {
      throw std::invalid_argument(
          "CheckBenchmarkGuarantee: benchmark set is infeasible");
    }
    y.ForEach([&counts](int v) { ++counts[static_cast<std::size_t>(v)]; });
    sum_sizes += y.size();
    sum_values += f.Value(y);
  }
  const std::int64_t m = *std::max_element(counts.begin(), counts.end());
  const std::int64_t r = p.multiset_size();
  const std::int64_t y_count = static_cast<std::int64_t>(y_sets.size());

  std::int64_t num = 0;  // first factor candidate, over denominator den
  std::int64_t den = 1;
  switch (kind) {
    case ConstraintKind::kUniform: {
      const std::int64_t k_cap = k_cap_or_members;
      if (l * sum_sizes >= k_cap * m * (r - 1)) {
        // h > 1 collapses the first factor to S/K + |Y|.
        num = sum_sizes + k_cap * y_count;
        den = k_cap;
      } else {
        num = m * (r - 1) + l * y_count;
        den = l;
      }
      break;
    }
    case ConstraintKind::kMatroid:
      num = m * (r - 1) + 2 * l * y_count;
      den = l;
      break;
    case ConstraintKind::kIntersection:
      num = m * (r - 1) + (k_cap_or_members + 1) * l * y_count;
      den = l;
      break;
  }
  return FactorTimesAtLeast(num, den, sum_sizes, min_value, sum_values);
}

namespace {

__int128 PowI128(std::int64_t base, int exp) {
  __int128 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

bool CheckDisjointRegimeGuarantee(const SolutionMultiset& p,
                                  std::span<const std::int64_t> values,
                                  ConstraintKind kind, int l,
                                  std::int64_t disjoint_count,
                                  std::int64_t alpha_num,
                                  std::int64_t alpha_den, std::int64_t opt) {
  const std::int64_t r = p.multiset_size();
  for (int i = 0; i < p.multiset_size(); ++i) {
    const std::int64_t size = p.solution(i).size();
    if (size <= 1) continue;
    const std::int64_t eta = kind == ConstraintKind::kUniform ? size - 1 : size;
    if (disjoint_count <= eta * (r - 1) / l) continue;
    const std::int64_t value = values[static_cast<std::size_t>(i)];
    if (kind == ConstraintKind::kUniform) {
      // f(x) >= alpha (1 - (1 - 1/|x|)^{|x|}) opt.
      const __int128 pow_full = PowI128(size, static_cast<int>(size));
      const __int128 pow_small = PowI128(size - 1, static_cast<int>(size));
      if (static_cast<__int128>(value) * alpha_den * pow_full <
          static_cast<__int128>(alpha_num) * (pow_full - pow_small) * opt) {
        return false;
      }
    } else {
      if (static_cast<__int128>(value) * 2 * alpha_den <
          static_cast<__int128>(alpha_num) * opt) {
        return false;
      }
    }
  }
  return true;
}

bool CheckRunningDiversityFloor(const RunTrace& trace, int r, int l) {
  std::int64_t t = 0;
  for (const TraceStep& step : trace.steps) {
    if (step.phase != 2) continue;
    ++t;
    const std::int64_t c = t % l;
    const std::int64_t floor =
        (t / l) * static_cast<std::int64_t>(l) * (r - l) + c * (r - c);
    if (step.distance_sum_after < floor) return false;
  }
  return true;
}

bool CheckBalancedGrowth(const RunTrace& trace, int r, int initial_size) {
  std::vector<int> sizes(static_cast<std::size_t>(r), initial_size);
  for (const TraceStep& step : trace.steps) {
    if (step.phase != 2) continue;
    ++sizes[static_cast<std::size_t>(step.solution_index)];
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) return false;
  }
  return true;
}

bool CheckPerSolutionGainsNonincreasing(const RunTrace& trace, int r,
                                        std::int64_t seed_value) {
  std::vector<std::int64_t> last_value(static_cast<std::size_t>(r), seed_value);
  std::vector<std::int64_t> last_gain(static_cast<std::size_t>(r), seed_value);
  for (const TraceStep& step : trace.steps) {
    if (step.phase != 2) continue;
    const auto i = static_cast<std::size_t>(step.solution_index);
    const std::int64_t gain = step.values_after[i] - last_value[i];
    if (gain > last_gain[i]) return false;
    last_value[i] = step.values_after[i];
    last_gain[i] = gain;
  }
  return true;
}

}  // namespace divgreedy

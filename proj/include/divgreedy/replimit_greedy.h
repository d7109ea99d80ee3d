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

#ifndef DIVGREEDY_REPLIMIT_GREEDY_H_
#define DIVGREEDY_REPLIMIT_GREEDY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "divgreedy/matroid.h"
#include "divgreedy/objective.h"
#include "divgreedy/run_trace.h"
#include "divgreedy/solution.h"

namespace divgreedy {

struct RepLimitConfig {
  int multiset_size = 2;  // must be >= 2
  int rep_limit = 1;      // in [1, multiset_size]
};

// Simultaneous greedy under any downward-closed, loop-free constraint.
// Every solution starts as {v*}, the feasible singleton of largest value
// (ties to the smallest id). Each iteration inserts the solution-element
// pair minimizing, lexicographically,
//   (size of the solution, value loss of the insertion,
//    value of the solution, count of the element),
// over pairs that keep the solution feasible, do not decrease its value,
// and whose element is represented in fewer than rep_limit solutions (the
// seed is exempt by construction); final ties go to the smallest
// (solution index, element id). Terminates when no pair qualifies.
//
// Throws if no singleton is feasible or the config is out of range.
GreedyResult RunRepLimitGreedy(const ValueOracle& f,
                               const IndependenceOracle& c,
                               const RepLimitConfig& cfg);

// Guarantees under a K-rank uniform constraint, checked exactly:
//   min{(r-1)/l + 1, k} * min_value >= best_k
//     (best_k = max f over sets of at most k elements, k <= (r-1)K/l)
//   ss(P) >= l(r-l) floor(h/l) + c(r-c),
//     h = min{r(K-1), l(n-1)}, c = h mod l.
bool CheckRepLimitUniformGuarantees(const SolutionMultiset& p,
                                    std::int64_t min_value, int k_cap, int l,
                                    int k, std::int64_t best_k);

// Guarantees under a matroid, checked exactly:
//   min{(r-1)/l + 2, rank} * min_value >= opt
//   ss(P) >= l(r-l)(rank-1).
bool CheckRepLimitMatroidGuarantees(const SolutionMultiset& p,
                                    std::int64_t min_value, int rank, int l,
                                    std::int64_t opt);

// Objective guarantee under an intersection of k_members matroids:
//   min{(r-1)/l + k_members + 1, max_feasible_size} * min_value >= opt.
bool CheckIntersectionObjectiveGuarantee(const SolutionMultiset& p,
                                         std::int64_t min_value, int k_members,
                                         int l, int max_feasible_size,
                                         std::int64_t opt);

// Benchmark guarantee against an arbitrary feasible multiset Y:
//   uniform:       min{m(r-1)h/l + |Y|, S} * min_value >= sum_y f(y),
//                  h = max{l S / (K m (r-1)), 1}
//   matroid:       min{m(r-1)/l + 2|Y|, S} * min_value >= sum_y f(y)
//   intersection:  min{m(r-1)/l + (k_members+1)|Y|, S} * min_value >= sum f(y)
// with m = max_v n_v(Y) and S = sum_y |y|. Throws if some y in Y is not
// feasible under `c`. `k_cap_or_members` carries K for the uniform kind and
// the number of member matroids for the intersection kind.
bool CheckBenchmarkGuarantee(const SolutionMultiset& p, std::int64_t min_value,
                             std::span<const Solution> y_sets,
                             const ValueOracle& f, const IndependenceOracle& c,
                             ConstraintKind kind, int k_cap_or_members, int l);

// Regime in which many disjoint approximations force classical-greedy
// objective quality. For every solution x with |x| > 1, letting eta be
// |x| - 1 under a uniform constraint and |x| otherwise, if
// disjoint_count > floor(eta (r-1) / l) then
//   uniform: f(x) >= alpha (1 - (1 - 1/|x|)^{|x|}) * opt
//   matroid: f(x) >= alpha * opt / 2
// with alpha = alpha_num / alpha_den.
bool CheckDisjointRegimeGuarantee(const SolutionMultiset& p,
                                  std::span<const std::int64_t> values,
                                  ConstraintKind kind, int l,
                                  std::int64_t disjoint_count,
                                  std::int64_t alpha_num,
                                  std::int64_t alpha_den, std::int64_t opt);

// Per-iteration diversity floor: after t main-loop insertions,
//   ss >= floor(t/l) l(r-l) + c(r-c) with c = t mod l.
bool CheckRunningDiversityFloor(const RunTrace& trace, int r, int l);

// After every iteration the solution sizes differ by at most one.
bool CheckBalancedGrowth(const RunTrace& trace, int r, int initial_size);

// Within each solution, successive marginal gains never increase.
bool CheckPerSolutionGainsNonincreasing(const RunTrace& trace, int r,
                                        std::int64_t seed_value);

}  // namespace divgreedy

#endif  // DIVGREEDY_REPLIMIT_GREEDY_H_

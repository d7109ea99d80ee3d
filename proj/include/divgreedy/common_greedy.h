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

#ifndef DIVGREEDY_COMMON_GREEDY_H_
#define DIVGREEDY_COMMON_GREEDY_H_

#include <cstdint>

#include "divgreedy/matroid.h"
#include "divgreedy/objective.h"
#include "divgreedy/run_trace.h"
#include "divgreedy/solution.h"

namespace divgreedy {

struct CommonGreedyConfig {
  int common_elements = 0;  // number of greedily chosen shared elements
  int multiset_size = 2;    // must be >= 2
};

// Two-phase greedy. Phase 1 grows a common prefix x of up to
// `common_elements` elements by classical greedy (largest marginal gain,
// ties to the smallest element id). Phase 2 starts from multiset_size
// indexed copies of x and repeatedly inserts the solution-element pair
// minimizing, lexicographically,
//   (count of the element, feasible extensions of the solution,
//    value of the solution, value loss of the insertion),
// over pairs that keep the solution independent, do not decrease its value,
// and whose element is represented in fewer than ceil(r/2) solutions; final
// ties go to the smallest (solution index, element id). The representation
// cap guarantees the distance sum never decreases.
//
// Requires a loop-free matroid. Throws if common_elements exceeds the rank
// or multiset_size < 2.
GreedyResult RunCommonGreedy(const ValueOracle& f, const Matroid& m,
                             const CommonGreedyConfig& cfg);

// Exactness under a K-rank uniform constraint: the achieved distance sum
// must equal MaxDistanceSum(n - b, K - b, r).
bool CheckUniformExactDiversity(const SolutionMultiset& p, int k_cap, int b);

// Floor under a general matroid:
//   ss(P) >= MaxDistanceSum(rank-b-1, rank-b-1, r) + MaxDistanceSum(m, 1, r)
// with m = |V \ cl(phase1)| - rank + b + 1.
bool CheckMatroidDiversityFloor(const SolutionMultiset& p, const Matroid& m,
                                const Solution& phase1, int b);

// Phase-1 value against the exact optimum `opt`:
//   uniform:  f(x) >= (1 - (1 - 1/K)^b) * opt
//   matroid:  f(x) >= (1 - (1 - 1/rank)^min(b,k)) * opt   and
//             f(x) >= b / (2 * rank) * opt,
// where k is one less than the size of the smallest dependent set. All
// comparisons are exact integer arithmetic.
bool CheckCommonPrefixObjective(std::int64_t phase1_value, std::int64_t opt,
                                ConstraintKind kind, int rank, int b, int k);

// Phase-2 distance sums from the trace are nondecreasing.
bool Phase2DiversityNondecreasing(const RunTrace& trace);

}  // namespace divgreedy

#endif  // DIVGREEDY_COMMON_GREEDY_H_

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

#ifndef DIVGREEDY_RUN_TRACE_H_
#define DIVGREEDY_RUN_TRACE_H_

#include <cstdint>
#include <vector>

#include "divgreedy/solution.h"

namespace divgreedy {

enum class ConstraintKind { kUniform, kMatroid, kIntersection };

// One insertion made by a greedy run.
struct TraceStep {
  int phase = 0;           // 1 = common prefix, 2 = multiset growth
  int solution_index = 0;  // -1 during phase 1
  int element = 0;
  int count_before = 0;    // representation count of `element` before this step
  std::int64_t distance_sum_after = 0;
  // Objective value of every solution after this step. During phase 1 this
  // holds the single prefix value.
  std::vector<std::int64_t> values_after;
};

// Full record of a run; lets invariants be checked during, not just after,
// the run.
struct RunTrace {
  // Common prefix built in phase 1, or the singleton {seed} for the
  // representation-limited algorithm.
  Solution phase1;
  int seed = -1;  // seed element of the representation-limited algorithm
  std::vector<TraceStep> steps;
};

struct GreedyResult {
  SolutionMultiset multiset;
  RunTrace trace;
};

}  // namespace divgreedy

#endif  // DIVGREEDY_RUN_TRACE_H_

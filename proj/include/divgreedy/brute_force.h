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

#ifndef DIVGREEDY_BRUTE_FORCE_H_
#define DIVGREEDY_BRUTE_FORCE_H_

#include <cstdint>
#include <vector>

#include "divgreedy/matroid.h"
#include "divgreedy/objective.h"
#include "divgreedy/solution.h"

namespace divgreedy {

// Desk-scale exact solvers. Enumeration refuses anything beyond these limits.
struct OracleLimits {
  int max_ground = 12;          // whole-ground-set enumerations
  int max_diverse_ground = 8;   // multiset enumerations
  int max_r = 3;                // multiset size in diverse enumeration
};

// Approximation threshold as an exact rational in [0, 1].
struct Alpha {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // value >= alpha * opt, compared without rounding.
  bool Admits(std::int64_t value, std::int64_t opt) const {
    return static_cast<__int128>(value) * den >=
           static_cast<__int128>(num) * opt;
  }
};

struct OptimumResult {
  std::int64_t value = 0;
  Solution witness;
};

// Exhaustive maximum of f over the feasible sets. The witness is the
// first maximizer in increasing mask order.
OptimumResult ExactOptimum(const ValueOracle& f, const IndependenceOracle& c,
                           const OracleLimits& limits = {});

struct DiverseOptimumResult {
  std::int64_t distance_sum = 0;
  std::vector<Solution> witness;
};

// Exhaustive maximum distance sum over r-multisets of feasible
// alpha-approximations. Multisets are enumerated canonically (as
// nondecreasing tuples), cutting the search by roughly r!.
DiverseOptimumResult ExactDiverseOptimum(const ValueOracle& f,
                                         const IndependenceOracle& c, int r,
                                         const Alpha& alpha,
                                         const OracleLimits& limits = {});

// Largest number of pairwise disjoint nonempty feasible
// alpha-approximations, by exact search.
int DisjointApproxCount(const ValueOracle& f, const IndependenceOracle& c,
                        const Alpha& alpha, const OracleLimits& limits = {});

// Size of the smallest dependent set, minus nothing: returns n + 1 when
// every subset is feasible.
int MinDependentSetSize(const IndependenceOracle& c,
                        const OracleLimits& limits = {});

// Largest feasible set size.
int MaxFeasibleSize(const IndependenceOracle& c,
                    const OracleLimits& limits = {});

// Maximum of f over sets of at most k elements.
std::int64_t MaxValueUpToSize(const ValueOracle& f, int k,
                              const OracleLimits& limits = {});

// Cyclic-shift family: solution i is {(i*s + j) mod n : j in [0, s)}. Its
// distance sum meets MaxDistanceSum(n, s, r) exactly.
SolutionMultiset CyclicUniformFixture(int n, int s, int r);

// Strictly decreasing integer weights n, n-1, ..., 1.
ModularObjective ModularDecreasingFixture(int n);

// Rank-s partition matroid in which element 0 shares a unit-capacity block
// with the tail elements s, ..., n-1; elements 1, ..., s-1 are free. Any
// multiset of solutions all containing element 0 is confined to the first
// s elements.
PartitionMatroid TailBlockMatroid(int n, int s);

}  // namespace divgreedy

#endif  // DIVGREEDY_BRUTE_FORCE_H_

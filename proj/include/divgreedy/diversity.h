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

#ifndef DIVGREEDY_DIVERSITY_H_
#define DIVGREEDY_DIVERSITY_H_

#include <cstdint>
#include <span>

#include "divgreedy/matroid.h"
#include "divgreedy/solution.h"

namespace divgreedy {

// All diversity arithmetic is exact 64-bit integer arithmetic; no value here
// can overflow for ground sizes and multiset sizes up to 2^20.

// Sum over unordered solution pairs of their Hamming distances, each pair
// counted once. Evaluated through the representation counts:
//   sum_v n_v * (r - n_v).
std::int64_t PairwiseDistanceSum(const SolutionMultiset& p);

// Change in the pairwise distance sum when an element with representation
// count `count` is inserted into one solution of a multiset of size
// `multiset_size`:  multiset_size - 2 * count - 1.
std::int64_t DiversityDelta(std::int64_t multiset_size, std::int64_t count);

// Closed-form maximum distance sum of a multiset of `multiset_size` sets,
// each of size at most `solution_cap`, over a ground set of `ground` elements.
// With h = min(solution_cap, ground/2), possibly half-integral,
// H = ceil(c/2)*ceil(h) + floor(c/2)*floor(h), q = H / ground and
// m = H mod ground, the value is  ground*q*(c-q) + m*(c-2q-1).
// Zero when ground = 0, solution_cap = 0, or multiset_size <= 1.
std::int64_t MaxDistanceSum(std::int64_t ground, std::int64_t solution_cap,
                            std::int64_t multiset_size);

// Distance-sum ceiling for multisets of r independent sets of a matroid:
// MaxDistanceSum(|V|, rank, r).
std::int64_t MatroidDistanceSumBound(const Matroid& m, int r);

// Block-wise ceiling for a partition matroid: the distance sum decomposes
// over disjoint ground subsets, so the bound is the sum of the per-block
// ceilings. Throws if the spans differ in length.
std::int64_t PartitionDistanceSumBound(std::span<const int> block_sizes,
                                       std::span<const int> caps, int r);

// Ceiling sharpened through the closure of a caller-supplied independent set
// x: with c = |cl(x)| and n_x = min(rank * c / |V|, |x|) (a rational),
//   MaxDistanceSum(|V| - c, rank - floor(n_x), r)
//     + MaxDistanceSum(c, ceil(n_x), r).
// The minimum of this expression over candidate sets x is a valid bound;
// a single arbitrary x need not sharpen anything. Throws if x is dependent.
std::int64_t ClosureSharpenedDistanceSumBound(const Matroid& m,
                                              const Solution& x, int r);

// Scaling inequality of the ceiling under proportional shrinking of the
// ground set: checks, exactly in integers, that
//   MaxDistanceSum(ceil(k*a/b), k, c) >= k * MaxDistanceSum(a, b, c) / b.
// Requires a, b, c >= 1 and k >= 0.
bool CheckDistanceSumScaling(std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t k);

}  // namespace divgreedy

#endif  // DIVGREEDY_DIVERSITY_H_

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

#include "divgreedy/diversity.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace divgreedy {

std::int64_t PairwiseDistanceSum(const SolutionMultiset& p) {
  const std::int64_t r = p.multiset_size();
  std::int64_t total = 0;
  for (int n : p.counts()) total += static_cast<std::int64_t>(n) * (r - n);
  return total;
}

std::int64_t DiversityDelta(std::int64_t multiset_size, std::int64_t count) {
  return multiset_size - 2 * count - 1;
}

std::int64_t MaxDistanceSum(std::int64_t ground, std::int64_t solution_cap,
                            std::int64_t multiset_size) {
  assert(ground >= 0 && solution_cap >= 0 && multiset_size >= 0);
  const std::int64_t a = ground;
  const std::int64_t c = multiset_size;
  if (a == 0 || solution_cap == 0 || c <= 1) return 0;
  // h = min(solution_cap, a/2) may be half-integral; carry it as twice its
  // value so the floors and ceilings below stay exact.
  const std::int64_t h2 = std::min(2 * solution_cap, a);
  const std::int64_t h_ceil = (h2 + 1) / 2;
  const std::int64_t h_floor = h2 / 2;
  const std::int64_t big_h = ((c + 1) / 2) * h_ceil + (c / 2) * h_floor;
  const std::int64_t q = big_h / a;
  const std::int64_t m = big_h % a;
  return a * q * (c - q) + m * (c - 2 * q - 1);
}

std::int64_t MatroidDistanceSumBound(const Matroid& m, int r) {
  return MaxDistanceSum(m.ground_size(), RankOf(m), r);
}

std::int64_t PartitionDistanceSumBound(std::span<const int> block_sizes,
                                       std::span<const int> caps, int r) {
  if (block_sizes.size() != caps.size()) {
    throw std::invalid_argument(
        "PartitionDistanceSumBound: block_sizes and caps differ in length");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    total += MaxDistanceSum(block_sizes[i], caps[i], r);
  }
  return total;
}

std::int64_t ClosureSharpenedDistanceSumBound(const Matroid& m,
                                              const Solution& x, int r) {
  const Solution closure = ClosureOf(m, x);  // throws if x is dependent
  const std::int64_t n = m.ground_size();
  const std::int64_t rank = RankOf(m);
  const std::int64_t cl = closure.size();
  // n_x = min(rank * cl / n, |x|), a rational with denominator n.
  std::int64_t nx_floor;
  std::int64_t nx_ceil;
  const std::int64_t num = rank * cl;
  if (n > 0 && num <= static_cast<std::int64_t>(x.size()) * n) {
    nx_floor = num / n;
    nx_ceil = (num + n - 1) / n;
  } else {
    nx_floor = nx_ceil = x.size();
  }
  return MaxDistanceSum(n - cl, rank - nx_floor, r) +
         MaxDistanceSum(cl, nx_ceil, r);
}

bool CheckDistanceSumScaling(std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t k) {
  if (a < 1 || b < 1 || c < 1 || k < 0) {
    throw std::invalid_argument("CheckDistanceSumScaling: bad arguments");
  }
  const std::int64_t shrunk = MaxDistanceSum((k * a + b - 1) / b, k, c);
  return shrunk * b >= k * MaxDistanceSum(a, b, c);
}

}  // namespace divgreedy

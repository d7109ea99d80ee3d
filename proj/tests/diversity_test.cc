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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "divgreedy/diversity.h"
#include "divgreedy/matroid.h"
#include "divgreedy/solution.h"
#include "test_util.h"

using divgreedy::CheckDistanceSumScaling;
using divgreedy::ClosureSharpenedDistanceSumBound;
using divgreedy::DiversityDelta;
using divgreedy::MatroidDistanceSumBound;
using divgreedy::MaxDistanceSum;
using divgreedy::PairwiseDistanceSum;
using divgreedy::PartitionDistanceSumBound;
using divgreedy::PartitionMatroid;
using divgreedy::Solution;
using divgreedy::SolutionMultiset;
using divgreedy::UniformMatroid;

namespace {

// Exhaustive maximum distance sum of a c-multiset of at-most-b-subsets of an
// a-set, from raw pairwise Hamming distances. The reference the closed form
// is checked against.
std::int64_t BruteMaxDistanceSum(int a, int b, int c) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t m = 0; m < (1u << a); ++m) {
    if (std::popcount(m) <= b) pool.push_back(m);
  }
  std::vector<std::uint32_t> pick(static_cast<std::size_t>(c));
  std::int64_t best = 0;
  const auto descend = [&](auto&& self, int depth, std::size_t from) -> void {
    if (depth == c) {
      std::int64_t sum = 0;
      for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
          sum += std::popcount(pick[static_cast<std::size_t>(i)] ^
                               pick[static_cast<std::size_t>(j)]);
        }
      }
      best = std::max(best, sum);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick[static_cast<std::size_t>(depth)] = pool[i];
      self(self, depth + 1, i);
    }
  };
  if (a >= 0 && c >= 1) descend(descend, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("pairwise distance sum on small multisets") {
  // {1,2} and {2,3}: symmetric difference has two elements.
  auto p = SolutionMultiset::Of(
      {Solution::Of(3, {0, 1}), Solution::Of(3, {1, 2})});
  CHECK(PairwiseDistanceSum(p) == 2);

  // Duplicate-only multisets have zero diversity.
  auto same = SolutionMultiset::Replicate(Solution::Of(4, {0, 3}), 5);
  CHECK(PairwiseDistanceSum(same) == 0);

  // Three pairs at distance 2 each.
  auto three = SolutionMultiset::Of({Solution::Of(3, {0, 1}),
                                     Solution::Of(3, {0, 2}),
                                     Solution::Of(3, {1, 2})});
  CHECK(PairwiseDistanceSum(three) == 6);
}

TEST_CASE("distance sum equals the pairwise Hamming definition") {
  testutil::Rng rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.Range(1, 10);
    const int r = rng.Range(1, 6);
    const auto p = testutil::RandomMultiset(rng, n, r);
    CHECK(PairwiseDistanceSum(p) == testutil::DirectDistanceSum(p));
  }
}

TEST_CASE("distance sum decomposes over ground-set partitions") {
  testutil::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Range(2, 10);
    const int r = rng.Range(2, 5);
    const auto p = testutil::RandomMultiset(rng, n, r);
    const int blocks = rng.Range(1, n);
    std::vector<int> block_of(static_cast<std::size_t>(n));
    for (auto& b : block_of) b = rng.Below(blocks);
    std::int64_t split_sum = 0;
    for (int b = 0; b < blocks; ++b) {
      std::vector<Solution> restricted;
      for (int i = 0; i < r; ++i) {
        Solution s(n);
        p.solution(i).ForEach([&](int v) {
          if (block_of[static_cast<std::size_t>(v)] == b) s.Insert(v);
        });
        restricted.push_back(std::move(s));
      }
      split_sum +=
          PairwiseDistanceSum(SolutionMultiset::Of(std::move(restricted)));
    }
    CHECK(split_sum == PairwiseDistanceSum(p));
  }
}

TEST_CASE("insertion delta") {
  CHECK(DiversityDelta(5, 2) == 0);
  CHECK(DiversityDelta(2, 0) == 1);
  CHECK(DiversityDelta(4, 3) == -3);

  // Inserting v into one solution moves the distance sum by exactly the
  // delta of its current count.
  testutil::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.Range(1, 10);
    const int r = rng.Range(2, 6);
    auto p = testutil::RandomMultiset(rng, n, r);
    const int i = rng.Below(r);
    const int v = rng.Below(n);
    if (p.solution(i).contains(v)) continue;
    const std::int64_t before = PairwiseDistanceSum(p);
    const std::int64_t delta = DiversityDelta(r, p.count(v));
    p.Insert(i, v);
    CHECK(PairwiseDistanceSum(p) == before + delta);
  }
}

TEST_CASE("distance-sum ceiling: frozen values") {
  CHECK(MaxDistanceSum(4, 2, 2) == 4);
  CHECK(MaxDistanceSum(5, 0, 7) == 0);
  CHECK(MaxDistanceSum(3, 1, 2) == 2);
  CHECK(MaxDistanceSum(0, 3, 4) == 0);
  CHECK(MaxDistanceSum(6, 3, 1) == 0);
  for (int c = 2; c <= 12; c += 2) {
    CHECK(MaxDistanceSum(100, 50, c) == 25ll * c * c);
  }
}

TEST_CASE("distance-sum ceiling matches exhaustive search") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (int c = 1; c <= 4; ++c) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(MaxDistanceSum(a, b, c) == BruteMaxDistanceSum(a, b, c));
      }
    }
  }
}

TEST_CASE("ceiling is monotone in each argument") {
  for (int a = 0; a <= 18; ++a) {
    for (int b = 0; b <= 18; ++b) {
      for (int c = 1; c <= 8; ++c) {
        const std::int64_t here = MaxDistanceSum(a, b, c);
        CHECK(MaxDistanceSum(a + 1, b, c) >= here);
        CHECK(MaxDistanceSum(a, b + 1, c) >= here);
        CHECK(MaxDistanceSum(a, b, c + 1) >= here);
      }
    }
  }
}

TEST_CASE("ceiling is superadditive over split ground sets") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int parts = rng.Range(2, 4);
    const int c = rng.Range(2, 8);
    std::int64_t total_a = 0;
    std::int64_t total_b = 0;
    std::int64_t sum = 0;
    for (int i = 0; i < parts; ++i) {
      const int a = rng.Range(0, 12);
      const int b = rng.Range(0, 12);
      total_a += a;
      total_b += b;
      sum += MaxDistanceSum(a, b, c);
    }
    CHECK(MaxDistanceSum(total_a, total_b, c) >= sum);
  }
}

TEST_CASE("matroid distance-sum bound") {
  const UniformMatroid u42(4, 2);
  CHECK(MatroidDistanceSumBound(u42, 2) == 4);
  CHECK(MatroidDistanceSumBound(u42, 1) == 0);

  const PartitionMatroid two_blocks({0, 0, 1, 1}, {1, 1});
  CHECK(MatroidDistanceSumBound(two_blocks, 2) == 4);
}

TEST_CASE("partition distance-sum bound") {
  const std::vector<int> sizes{2, 2};
  const std::vector<int> caps{1, 1};
  CHECK(PartitionDistanceSumBound(sizes, caps, 2) == 4);
  CHECK(PartitionDistanceSumBound(sizes, caps, 1) == 0);

  const std::vector<int> one_size{3};
  const std::vector<int> one_cap{1};
  CHECK(PartitionDistanceSumBound(one_size, one_cap, 2) == 2);

  const std::vector<int> short_caps{1};
  CHECK_THROWS_AS(PartitionDistanceSumBound(sizes, short_caps, 2),
                  std::invalid_argument);
}

TEST_CASE("closure-sharpened bound") {
  const PartitionMatroid m({0, 0, 1, 1}, {1, 1});
  // Empty prefix falls back to the plain matroid bound on loop-free M.
  CHECK(ClosureSharpenedDistanceSumBound(m, Solution(4), 2) ==
        MatroidDistanceSumBound(m, 2));
  // cl({0}) = {0,1}, n_x = min(2*2/4, 1) = 1: both halves contribute 2.
  CHECK(ClosureSharpenedDistanceSumBound(m, Solution::Of(4, {0}), 2) == 4);

  // A base of a free uniform matroid spans everything.
  const UniformMatroid full(4, 4);
  CHECK(ClosureSharpenedDistanceSumBound(full, Solution::Of(4, {0, 1, 2, 3}),
                                         3) == MaxDistanceSum(4, 4, 3));

  // Dependent input is rejected.
  const UniformMatroid u42(4, 2);
  CHECK_THROWS_AS(
      ClosureSharpenedDistanceSumBound(u42, Solution::Of(4, {0, 1, 2}), 2),
      std::invalid_argument);
}

TEST_CASE("ceiling scaling inequality") {
  CHECK(CheckDistanceSumScaling(4, 2, 2, 1));
  CHECK(CheckDistanceSumScaling(10, 5, 4, 2));
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      for (int c = 1; c <= 6; ++c) {
        CHECK(CheckDistanceSumScaling(a, b, c, b));  // equality case
        for (int k = 0; k <= 6; ++k) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(k);
          CHECK(CheckDistanceSumScaling(a, b, c, k));
        }
      }
    }
  }
  CHECK_THROWS_AS(CheckDistanceSumScaling(0, 1, 1, 1), std::invalid_argument);
}

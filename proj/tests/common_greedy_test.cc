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

#include <memory>

#include "divgreedy/brute_force.h"
#include "divgreedy/common_greedy.h"
#include "divgreedy/diversity.h"
#include "test_util.h"

using divgreedy::CheckCommonPrefixObjective;
using divgreedy::CheckMatroidDiversityFloor;
using divgreedy::CheckUniformExactDiversity;
using divgreedy::CommonGreedyConfig;
using divgreedy::ConstraintKind;
using divgreedy::ExactOptimum;
using divgreedy::Graph;
using divgreedy::GreedyResult;
using divgreedy::Matroid;
using divgreedy::MaxDistanceSum;
using divgreedy::MinDependentSetSize;
using divgreedy::ModularObjective;
using divgreedy::PairwiseDistanceSum;
using divgreedy::PartitionMatroid;
using divgreedy::Phase2DiversityNondecreasing;
using divgreedy::RankOf;
using divgreedy::RunCommonGreedy;
using divgreedy::Solution;
using divgreedy::SolutionMultiset;
using divgreedy::UniformMatroid;
using divgreedy::ValueOracle;
using divgreedy::VertexCoverageObjective;

TEST_CASE("hand-traced run under a uniform constraint") {
  const ModularObjective f({4, 3, 2, 1});
  const UniformMatroid m(4, 2);
  const GreedyResult result = RunCommonGreedy(f, m, {1, 2});
  CHECK(result.trace.phase1 == Solution::Of(4, {0}));
  CHECK(result.multiset.solution(0) == Solution::Of(4, {0, 1}));
  CHECK(result.multiset.solution(1) == Solution::Of(4, {0, 2}));
  CHECK(PairwiseDistanceSum(result.multiset) == 2);
  CHECK(PairwiseDistanceSum(result.multiset) == MaxDistanceSum(3, 1, 2));
  CHECK(CheckUniformExactDiversity(result.multiset, 2, 1));
}

TEST_CASE("no common prefix gives disjoint singletons") {
  const ModularObjective f({5, 5, 5, 5});
  const GreedyResult result = RunCommonGreedy(f, UniformMatroid(4, 1), {0, 2});
  CHECK(result.trace.phase1.empty());
  CHECK(result.multiset.solution(0) == Solution::Of(4, {0}));
  CHECK(result.multiset.solution(1) == Solution::Of(4, {1}));
  CHECK(PairwiseDistanceSum(result.multiset) == 2);
}

TEST_CASE("input validation") {
  const ModularObjective f({4, 3, 2, 1});
  const UniformMatroid m(4, 2);
  CHECK_THROWS_AS(RunCommonGreedy(f, m, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RunCommonGreedy(f, m, {-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RunCommonGreedy(f, m, {1, 1}), std::invalid_argument);
  // The full prefix budget b = rank is allowed; diversification is then empty.
  const GreedyResult result = RunCommonGreedy(f, m, {2, 3});
  CHECK(PairwiseDistanceSum(result.multiset) == 0);
  CHECK(CheckUniformExactDiversity(result.multiset, 2, 2));
}

TEST_CASE("uniform diversity is exact on randomized instances") {
  testutil::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.Range(4, 12);
    const int k = rng.Range(1, std::min(5, n));
    const int r = rng.Range(2, 6);
    const int b = rng.Below(k);
    const UniformMatroid m(n, k);
    const GreedyResult result = [&] {
      if (rng.Below(2) == 0) {
        const Graph g = testutil::RandomTestGraph(rng, n, rng.Range(10, 80));
        return RunCommonGreedy(VertexCoverageObjective(g), m, {b, r});
      }
      return RunCommonGreedy(testutil::RandomModular(rng, n, 9), m, {b, r});
    }();
    CAPTURE(n);
    CAPTURE(k);
    CAPTURE(r);
    CAPTURE(b);
    CHECK(CheckUniformExactDiversity(result.multiset, k, b));
    CHECK(Phase2DiversityNondecreasing(result.trace));
  }
}

TEST_CASE("diversity floor and feasibility under general matroids") {
  testutil::Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.Range(4, 10);
    const bool linear = rng.Below(2) == 0;
    std::unique_ptr<Matroid> m;
    if (linear) {
      m = std::make_unique<divgreedy::ExplicitMatroid>(
          testutil::RandomLinearMatroid(rng, n, rng.Range(2, 4)));
    } else {
      m = std::make_unique<PartitionMatroid>(
          testutil::RandomPartitionMatroid(rng, n));
    }
    const int rank = RankOf(*m);
    const int r = rng.Range(2, 5);
    const int b = rng.Below(rank + 1);
    const ModularObjective f = testutil::RandomModular(rng, n, 9);
    const GreedyResult result = RunCommonGreedy(f, *m, {b, r});

    for (int i = 0; i < r; ++i) {
      CHECK(m->IsIndependent(result.multiset.solution(i)));
      CHECK(result.trace.phase1.IsSubsetOf(result.multiset.solution(i)));
    }
    CHECK(Phase2DiversityNondecreasing(result.trace));
    if (b < rank) {
      CAPTURE(n);
      CAPTURE(rank);
      CAPTURE(r);
      CAPTURE(b);
      CHECK(CheckMatroidDiversityFloor(result.multiset, *m,
                                       result.trace.phase1, b));
    }
  }
}

TEST_CASE("diversity floor on the worked partition example") {
  const ModularObjective f({4, 3, 2, 1});
  const PartitionMatroid m({0, 0, 1, 1}, {1, 1});
  const GreedyResult result = RunCommonGreedy(f, m, {1, 2});
  // Phase 1 takes element 0; its closure is the first block, leaving two
  // spread elements: the floor is MaxDistanceSum(0,0,2) + MaxDistanceSum(2,1,2).
  CHECK(result.trace.phase1 == Solution::Of(4, {0}));
  CHECK(PairwiseDistanceSum(result.multiset) == 2);
  CHECK(CheckMatroidDiversityFloor(result.multiset, m, result.trace.phase1, 1));
}

TEST_CASE("phase-1 objective bound") {
  // b = 0 never constrains anything.
  CHECK(CheckCommonPrefixObjective(0, 100, ConstraintKind::kUniform, 3, 0, 3));

  testutil::Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.Range(4, 10);
    const bool uniform = rng.Below(2) == 0;
    std::unique_ptr<Matroid> m;
    if (uniform) {
      m = std::make_unique<UniformMatroid>(n, rng.Range(1, 5));
    } else {
      m = std::make_unique<PartitionMatroid>(
          testutil::RandomPartitionMatroid(rng, n));
    }
    const int rank = RankOf(*m);
    const int b = rng.Below(rank + 1);
    const ModularObjective f = testutil::RandomModular(rng, n, 9);
    const GreedyResult result = RunCommonGreedy(f, *m, {b, 2});
    const std::int64_t opt = ExactOptimum(f, *m).value;
    const std::int64_t prefix_value = f.Value(result.trace.phase1);
    const int k = MinDependentSetSize(*m) - 1;
    CHECK(CheckCommonPrefixObjective(
        prefix_value, opt,
        uniform ? ConstraintKind::kUniform : ConstraintKind::kMatroid, rank, b,
        k));
  }
}

TEST_CASE("identical inputs give identical runs") {
  testutil::Rng rng(109);
  const Graph g = testutil::RandomTestGraph(rng, 10, 40);
  const VertexCoverageObjective f(g);
  const UniformMatroid m(10, 4);
  const GreedyResult a = RunCommonGreedy(f, m, {2, 4});
  const GreedyResult b = RunCommonGreedy(f, m, {2, 4});
  CHECK(a.multiset.solutions() == b.multiset.solutions());
  REQUIRE(a.trace.steps.size() == b.trace.steps.size());
  for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
    CHECK(a.trace.steps[i].element == b.trace.steps[i].element);
    CHECK(a.trace.steps[i].solution_index == b.trace.steps[i].solution_index);
    CHECK(a.trace.steps[i].distance_sum_after ==
          b.trace.steps[i].distance_sum_after);
  }
}

TEST_CASE("oracle calls stay within the budget") {
  testutil::Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.Range(6, 12);
    const int k = rng.Range(1, 5);
    const int r = rng.Range(2, 6);
    const int b = rng.Below(k + 1);
    const Graph g = testutil::RandomTestGraph(rng, n, 40);
    const VertexCoverageObjective f(g);
    const UniformMatroid m(n, k);
    RunCommonGreedy(f, m, {b, r});
    const std::int64_t budget =
        static_cast<std::int64_t>(b) * n +
        static_cast<std::int64_t>(r) * (k - b) * (n - b);
    CHECK(f.call_count() + m.call_count() <= 6 * (budget + n + r + 1));
    f.ResetCallCount();
    m.ResetCallCount();
  }
}

TEST_CASE("trace records are coherent") {
  const ModularObjective f({4, 3, 2, 1, 0});
  const UniformMatroid m(5, 3);
  const GreedyResult result = RunCommonGreedy(f, m, {1, 3});
  std::int64_t running = 0;
  SolutionMultiset replay = SolutionMultiset::Replicate(result.trace.phase1, 3);
  for (const auto& step : result.trace.steps) {
    if (step.phase == 1) continue;
    CHECK(step.count_before == replay.count(step.element));
    replay.Insert(step.solution_index, step.element);
    running += divgreedy::DiversityDelta(3, step.count_before);
    CHECK(step.distance_sum_after == running);
    CHECK(step.values_after.size() == 3);
  }
  CHECK(replay.solutions() == result.multiset.solutions());
}

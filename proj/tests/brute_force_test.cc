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

#include "divgreedy/brute_force.h"
#include "divgreedy/diversity.h"
#include "divgreedy/graph.h"
#include "test_util.h"

using divgreedy::Alpha;
using divgreedy::CyclicUniformFixture;
using divgreedy::DisjointApproxCount;
using divgreedy::ExactDiverseOptimum;
using divgreedy::ExactOptimum;
using divgreedy::Graph;
using divgreedy::MaxDistanceSum;
using divgreedy::MaxFeasibleSize;
using divgreedy::MaxValueUpToSize;
using divgreedy::MinDependentSetSize;
using divgreedy::ModularDecreasingFixture;
using divgreedy::ModularObjective;
using divgreedy::OracleLimits;
using divgreedy::PairwiseDistanceSum;
using divgreedy::RankOf;
using divgreedy::Solution;
using divgreedy::TailBlockMatroid;
using divgreedy::UniformMatroid;
using divgreedy::VertexCoverageObjective;

namespace {

Graph Path3() {
  Graph g(3);
  g.AddEdge(0, 1);
  g.AddEdge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("exact optimum") {
  const ModularObjective f({4, 3, 2, 1});
  const auto best = ExactOptimum(f, UniformMatroid(4, 2));
  CHECK(best.value == 7);
  CHECK(best.witness == Solution::Of(4, {0, 1}));

  // Only the empty set feasible.
  CHECK(ExactOptimum(f, UniformMatroid(4, 0)).value == 0);

  const VertexCoverageObjective cover(Path3());
  const auto center = ExactOptimum(cover, UniformMatroid(3, 1));
  CHECK(center.value == 3);
  CHECK(center.witness == Solution::Of(3, {1}));

  CHECK_THROWS_AS(
      ExactOptimum(ModularObjective(std::vector<std::int64_t>(13, 1)),
                   UniformMatroid(13, 2)),
      std::invalid_argument);
}

TEST_CASE("exact diverse optimum") {
  const ModularObjective f({4, 3, 2, 1});
  const auto open = ExactDiverseOptimum(f, UniformMatroid(4, 2), 2, Alpha{0, 1});
  CHECK(open.distance_sum == 4);
  CHECK(open.distance_sum == MaxDistanceSum(4, 2, 2));

  CHECK(ExactDiverseOptimum(f, UniformMatroid(4, 2), 1, Alpha{0, 1})
            .distance_sum == 0);

  // The optimum {0,1} is unique, so alpha = 1 forces duplicates.
  CHECK(ExactDiverseOptimum(f, UniformMatroid(4, 2), 2, Alpha{1, 1})
            .distance_sum == 0);

  CHECK_THROWS_AS(
      ExactDiverseOptimum(ModularObjective(std::vector<std::int64_t>(9, 1)),
                          UniformMatroid(9, 2), 2, Alpha{0, 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(ExactDiverseOptimum(f, UniformMatroid(4, 2), 4, Alpha{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("diverse optimum stays below the matroid ceiling") {
  testutil::Rng rng(71);
  const ModularObjective zero(std::vector<std::int64_t>(6, 0));
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.Range(3, 6);
    const auto m = testutil::RandomLinearMatroid(rng, n, rng.Range(2, 4));
    const ModularObjective f = testutil::RandomModular(rng, n, 9);
    for (int r = 2; r <= 3; ++r) {
      const auto best = ExactDiverseOptimum(f, m, r, Alpha{0, 1});
      CHECK(best.distance_sum <= MaxDistanceSum(n, RankOf(m), r));
    }
  }
  // Uniform constraints meet the ceiling exactly.
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int r = 1; r <= 3; ++r) {
        const ModularObjective f(std::vector<std::int64_t>(
            static_cast<std::size_t>(n), 1));
        CHECK(ExactDiverseOptimum(f, UniformMatroid(n, k), r, Alpha{0, 1})
                  .distance_sum == MaxDistanceSum(n, k, r));
      }
    }
  }
}

TEST_CASE("disjoint approximation packing") {
  // Equal weights, singletons: every singleton is optimal.
  const ModularObjective ones(std::vector<std::int64_t>(6, 1));
  CHECK(DisjointApproxCount(ones, UniformMatroid(6, 1), Alpha{1, 1}) == 6);

  // A star: only the center attains the optimum.
  Graph star(5);
  for (int v = 1; v < 5; ++v) star.AddEdge(0, v);
  const VertexCoverageObjective star_cover(star);
  CHECK(DisjointApproxCount(star_cover, UniformMatroid(5, 1), Alpha{1, 1}) == 1);

  // Two disjoint paths: only the two centers attain the optimum.
  Graph paths(6);
  paths.AddEdge(0, 1);
  paths.AddEdge(1, 2);
  paths.AddEdge(3, 4);
  paths.AddEdge(4, 5);
  const VertexCoverageObjective path_cover(paths);
  CHECK(DisjointApproxCount(path_cover, UniformMatroid(6, 1), Alpha{1, 1}) == 2);

  // In a triangle every vertex covers the whole component, so two disjoint
  // triangles admit six disjoint optimal singletons.
  Graph triangles(6);
  triangles.AddEdge(0, 1);
  triangles.AddEdge(1, 2);
  triangles.AddEdge(0, 2);
  triangles.AddEdge(3, 4);
  triangles.AddEdge(4, 5);
  triangles.AddEdge(3, 5);
  const VertexCoverageObjective tri_cover(triangles);
  CHECK(DisjointApproxCount(tri_cover, UniformMatroid(6, 1), Alpha{1, 1}) == 6);

  // Halving the threshold can only widen the pool.
  CHECK(DisjointApproxCount(path_cover, UniformMatroid(6, 1), Alpha{1, 2}) >= 2);
}

TEST_CASE("smallest dependent set and largest feasible set") {
  CHECK(MinDependentSetSize(UniformMatroid(4, 2)) == 3);
  CHECK(MinDependentSetSize(UniformMatroid(4, 4)) == 5);  // free
  CHECK(MaxFeasibleSize(UniformMatroid(4, 2)) == 2);
  CHECK(MaxFeasibleSize(TailBlockMatroid(6, 3)) == 3);
  CHECK(MaxValueUpToSize(ModularObjective({4, 3, 2, 1}), 2) == 7);
}

TEST_CASE("cyclic fixture") {
  const auto p = CyclicUniformFixture(4, 2, 2);
  CHECK(p.solution(0) == Solution::Of(4, {0, 1}));
  CHECK(p.solution(1) == Solution::Of(4, {2, 3}));
  CHECK(PairwiseDistanceSum(p) == 4);

  CHECK(PairwiseDistanceSum(CyclicUniformFixture(5, 2, 1)) == 0);

  // The shifts attain the ceiling whenever solutions cover at most half the
  // ground set; beyond that they overshoot the quadratic optimum and only
  // stay below it.
  for (int n = 2; n <= 9; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (int r = 1; r <= 4; ++r) {
        const auto fixture = CyclicUniformFixture(n, s, r);
        const std::int64_t sum = PairwiseDistanceSum(fixture);
        if (2 * s <= n) {
          CHECK(sum == MaxDistanceSum(n, s, r));
        } else {
          CHECK(sum <= MaxDistanceSum(n, s, r));
        }
      }
    }
  }

  CHECK_THROWS_AS(CyclicUniformFixture(4, 5, 2), std::invalid_argument);
}

TEST_CASE("decreasing-weight fixture") {
  const ModularObjective f = ModularDecreasingFixture(4);
  CHECK(f.weights() == std::vector<std::int64_t>{4, 3, 2, 1});
}

TEST_CASE("tail-block matroid") {
  const auto m = TailBlockMatroid(6, 3);
  CHECK(RankOf(m) == 3);
  // Element 0 excludes the tail.
  CHECK(m.IsIndependent(Solution::Of(6, {0, 1, 2})));
  CHECK_FALSE(m.IsIndependent(Solution::Of(6, {0, 4})));
  CHECK(m.IsIndependent(Solution::Of(6, {1, 2, 4})));
  CHECK_FALSE(m.IsIndependent(Solution::Of(6, {3, 4})));
}

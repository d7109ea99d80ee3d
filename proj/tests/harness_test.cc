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

#include <sstream>

#include "divgreedy/diversity.h"
#include "divgreedy/plot.h"
#include "divgreedy/sweep.h"
#include "test_util.h"

using divgreedy::BuildConstraint;
using divgreedy::ConstraintSpec;
using divgreedy::EmitPlot;
using divgreedy::Graph;
using divgreedy::MaxDistanceSum;
using divgreedy::ParseCsv;
using divgreedy::PlotKind;
using divgreedy::RunSweep;
using divgreedy::SweepRequest;
using divgreedy::SweepRow;
using divgreedy::WriteCsv;

namespace {

SweepRequest ToyRequest() {
  SweepRequest req;
  req.graph_id = "toy8";
  req.constraint = ConstraintSpec::Uniform(3);
  req.r = 4;
  return req;
}

Graph Toy8() {
  testutil::Rng rng(401);
  return testutil::RandomTestGraph(rng, 8, 40);
}

}  // namespace

TEST_CASE("toy sweep rows carry the exact uniform diversity") {
  const Graph g = Toy8();
  SweepRequest req = ToyRequest();
  req.run_replimit = false;
  const auto rows = RunSweep(g, req);
  REQUIRE(rows.size() == 4);  // b in [0, 3]
  for (int b = 0; b <= 3; ++b) {
    const SweepRow& row = rows[static_cast<std::size_t>(b)];
    CHECK(row.algo == "common");
    CHECK(row.param == b);
    CHECK(row.ss == MaxDistanceSum(8 - b, 3 - b, 4));
    CHECK(row.ss <= row.ss_bound);
    CHECK(row.min_f <= row.mean_f);
    CHECK(row.mean_f <= static_cast<double>(row.best_known));
    CHECK(row.ms == 0);  // timing off by default
  }
}

TEST_CASE("replimit arm satisfies its floor") {
  const Graph g = Toy8();
  SweepRequest req = ToyRequest();
  req.run_common = false;
  const auto rows = RunSweep(g, req);
  REQUIRE(rows.size() == 4);  // l in [1, 4]
  for (const SweepRow& row : rows) {
    CHECK(row.algo == "replimit");
    const int l = row.param;
    const std::int64_t h =
        std::min<std::int64_t>(4 * (3 - 1), static_cast<std::int64_t>(l) * 7);
    const std::int64_t c = h % l;
    CHECK(row.ss >= l * (4 - l) * (h / l) + c * (4 - c));
    CHECK(row.ss <= row.ss_bound);
  }
}

TEST_CASE("sweeps are deterministic") {
  const Graph g = Toy8();
  const auto a = RunSweep(g, ToyRequest());
  const auto b = RunSweep(g, ToyRequest());
  CHECK(a == b);
  std::ostringstream csv_a;
  std::ostringstream csv_b;
  WriteCsv(csv_a, a);
  WriteCsv(csv_b, b);
  CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("csv round trip") {
  const Graph g = Toy8();
  const auto rows = RunSweep(g, ToyRequest());
  std::ostringstream first;
  WriteCsv(first, rows);
  std::istringstream back(first.str());
  const auto parsed = ParseCsv(back);
  std::ostringstream second;
  WriteCsv(second, parsed);
  CHECK(first.str() == second.str());
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].graph == rows[i].graph);
    CHECK(parsed[i].ss == rows[i].ss);
    CHECK(parsed[i].best_known == rows[i].best_known);
  }
}

TEST_CASE("empty row set still writes the header") {
  std::ostringstream out;
  WriteCsv(out, {});
  CHECK(out.str() ==
        "graph,constraint,algo,param,r,min_f,mean_f,ss,ss_bound,best_known,"
        "f_calls,indep_calls,ms\n");
  std::istringstream back(out.str());
  CHECK(ParseCsv(back).empty());
}

TEST_CASE("constraint building") {
  const Graph g = Toy8();
  const auto uniform = BuildConstraint(ConstraintSpec::Uniform(3), g);
  CHECK(uniform.id == "U3");
  CHECK(uniform.rank == 3);
  CHECK(uniform.matroid != nullptr);
  CHECK(uniform.DistanceSumBound(4) == MaxDistanceSum(8, 3, 4));

  const auto degree = BuildConstraint(ConstraintSpec::Parse("degree:4:1,1,1,1"), g);
  CHECK(degree.id == "P4");
  CHECK(degree.rank == 4);

  ConstraintSpec both;
  both.kind = ConstraintSpec::Kind::kIntersection;
  both.members.push_back(ConstraintSpec::Uniform(2));
  both.members.push_back(ConstraintSpec::Parse("degree:4:1,1,1,1"));
  const auto built = BuildConstraint(both, g);
  CHECK(built.id == "U2+P4");
  CHECK(built.matroid == nullptr);
  CHECK(built.DistanceSumBound(4) ==
        std::min(MaxDistanceSum(8, 2, 4),
                 degree.DistanceSumBound(4)));

  // The common-element arm cannot run without a matroid.
  SweepRequest req = ToyRequest();
  req.constraint = both;
  CHECK_THROWS_AS(RunSweep(g, req), std::invalid_argument);
  req.run_common = false;
  CHECK_FALSE(RunSweep(g, req).empty());

  CHECK_THROWS_AS(ConstraintSpec::Parse("mystery:1"), std::invalid_argument);
}

TEST_CASE("best-known lookup") {
  std::istringstream table(
      "# graph constraint value\n"
      "toy8 U3 12\n"
      "other U3 99\n");
  CHECK(divgreedy::LookupBestKnown(table, "toy8", "U3") == 12);
  std::istringstream again("toy8 U3 12\n");
  CHECK(!divgreedy::LookupBestKnown(again, "toy8", "U9").has_value());
}

TEST_CASE("user-supplied best-known wins") {
  const Graph g = Toy8();
  SweepRequest req = ToyRequest();
  req.best_known = 42;
  const auto rows = RunSweep(g, req);
  for (const SweepRow& row : rows) CHECK(row.best_known == 42);
}

TEST_CASE("plot emission") {
  const Graph g = Toy8();
  const auto rows = RunSweep(g, ToyRequest());
  std::ostringstream objective;
  EmitPlot(objective, rows, PlotKind::kObjective);
  CHECK(objective.str().find("<svg") != std::string::npos);
  CHECK(objective.str().find("polyline") != std::string::npos);
  CHECK(objective.str().find("common/U3/toy8") != std::string::npos);

  std::ostringstream diversity;
  EmitPlot(diversity, rows, PlotKind::kDiversity);
  CHECK(diversity.str().find("distance sum / ceiling") != std::string::npos);

  // Deterministic bytes.
  std::ostringstream again;
  EmitPlot(again, rows, PlotKind::kObjective);
  CHECK(objective.str() == again.str());

  // A single row degrades to a point marker.
  std::ostringstream single;
  EmitPlot(single, std::vector<SweepRow>{rows[0]}, PlotKind::kDiversity);
  CHECK(single.str().find("circle") != std::string::npos);

  CHECK_THROWS_AS(EmitPlot(single, {}, PlotKind::kObjective),
                  std::invalid_argument);
}

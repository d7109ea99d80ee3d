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

// Command-line front end: single runs, parameter sweeps, diversity bounds,
// desk-scale exact oracles, guarantee checks, and tightness fixtures.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divgreedy/brute_force.h"
#include "divgreedy/common_greedy.h"
#include "divgreedy/diversity.h"
#include "divgreedy/graph.h"
#include "divgreedy/matroid.h"
#include "divgreedy/objective.h"
#include "divgreedy/plot.h"
#include "divgreedy/replimit_greedy.h"
#include "divgreedy/sweep.h"

namespace {

using namespace divgreedy;

struct InstanceOptions {
  std::string graph_path;
  std::string format = "auto";
  bool complement = false;
  std::optional<int> uniform_cap;
  std::string partition_file;
  int degree_blocks = 0;
  std::string caps_list;
  bool degree_desc = false;
  std::vector<std::string> intersect_specs;

  Graph LoadInstanceGraph() const {
    GraphFormat fmt = GraphFormat::kAuto;
    if (format == "edge-list") fmt = GraphFormat::kEdgeList;
    if (format == "matrix-market") fmt = GraphFormat::kMatrixMarket;
    return LoadGraph(graph_path, fmt, complement);
  }

  std::string GraphId() const {
    auto stem = graph_path;
    const auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    const auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return complement ? stem + "-comp" : stem;
  }

  ConstraintSpec MakeConstraintSpec() const {
    int chosen = 0;
    chosen += uniform_cap.has_value() ? 1 : 0;
    chosen += partition_file.empty() ? 0 : 1;
    chosen += degree_blocks > 0 ? 1 : 0;
    chosen += intersect_specs.empty() ? 0 : 1;
    if (chosen != 1) {
      throw CLI::ValidationError(
          "constraint",
          "pick exactly one of --uniform, --partition, --degree-partition, "
          "--intersect");
    }
    if (uniform_cap) return ConstraintSpec::Uniform(*uniform_cap);
    ConstraintSpec spec;
    if (!partition_file.empty()) {
      spec.kind = ConstraintSpec::Kind::kPartitionFile;
      spec.partition_path = partition_file;
      return spec;
    }
    if (degree_blocks > 0) {
      return ConstraintSpec::Parse((degree_desc ? "degree-desc:" : "degree:") +
                                   std::to_string(degree_blocks) + ":" +
                                   caps_list);
    }
    spec.kind = ConstraintSpec::Kind::kIntersection;
    for (const std::string& text : intersect_specs) {
      spec.members.push_back(ConstraintSpec::Parse(text));
    }
    return spec;
  }
};

void AddInstanceOptions(CLI::App* cmd, InstanceOptions* opts) {
  cmd->add_option("--graph", opts->graph_path, "graph file")->required();
  cmd->add_option("--format", opts->format, "edge-list | matrix-market")
      ->check(CLI::IsMember({"auto", "edge-list", "matrix-market"}));
  cmd->add_flag("--complement", opts->complement, "complement the edge set");
  cmd->add_option("--uniform", opts->uniform_cap, "uniform matroid rank cap");
  cmd->add_option("--partition", opts->partition_file,
                  "partition matroid file (cap: id id ... per block)");
  cmd->add_option("--degree-partition", opts->degree_blocks,
                  "number of degree-sorted blocks");
  cmd->add_option("--caps", opts->caps_list,
                  "comma-separated caps for --degree-partition");
  cmd->add_flag("--degree-desc", opts->degree_desc,
                "sort degrees descending instead of ascending");
  cmd->add_option("--intersect", opts->intersect_specs,
                  "constraint member (uniform:K | partition:FILE | "
                  "degree:K:caps); repeat for an intersection");
}

Alpha ParseAlpha(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Alpha{std::stoll(text), 1};
  }
  return Alpha{std::stoll(text.substr(0, slash)),
               std::stoll(text.substr(slash + 1))};
}

std::string OneBased(const Solution& s) {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](int v) {
    if (!first) out += ' ';
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

struct CheckTally {
  int failures = 0;

  void Report(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  }
  void Skip(const std::string& name, const std::string& why) {
    std::cout << "SKIP  " << name << " (" << why << ")\n";
  }
};

int RunCommand(const InstanceOptions& instance, const std::string& algo,
               int r, std::optional<int> b, std::optional<int> l) {
  const Graph g = instance.LoadInstanceGraph();
  const BuiltConstraint built =
      BuildConstraint(instance.MakeConstraintSpec(), g);
  const VertexCoverageObjective f(g);

  GreedyResult result = [&] {
    if (algo == "common") {
      if (built.matroid == nullptr) {
        throw std::invalid_argument(
            "--algo common needs a matroid constraint");
      }
      return RunCommonGreedy(f, *built.matroid,
                             {b.value_or(0), r});
    }
    return RunRepLimitGreedy(f, *built.oracle, {r, l.value_or(1)});
  }();

  std::cout << "graph: " << instance.GraphId() << " (" << g.n()
            << " vertices, " << g.edge_count() << " edges)\n"
            << "constraint: " << built.id << "\n"
            << "algorithm: " << algo << " "
            << (algo == "common" ? "b=" + std::to_string(b.value_or(0))
                                 : "l=" + std::to_string(l.value_or(1)))
            << " r=" << r << "\n";
  std::int64_t min_f = 0;
  std::int64_t sum_f = 0;
  for (int i = 0; i < r; ++i) {
    const std::int64_t value = f.Value(result.multiset.solution(i));
    min_f = i == 0 ? value : std::min(min_f, value);
    sum_f += value;
    std::cout << "  solution " << i + 1 << ": f=" << value << " "
              << OneBased(result.multiset.solution(i)) << "\n";
  }
  std::cout << "min f: " << min_f << "\n"
            << "mean f: " << static_cast<double>(sum_f) / r << "\n"
            << "distance sum: " << PairwiseDistanceSum(result.multiset) << "\n"
            << "distance-sum ceiling: " << built.DistanceSumBound(r) << "\n"
            << "oracle calls: f=" << f.call_count()
            << " independence=" << built.oracle->call_count() << "\n";
  return 0;
}

int SweepCommand(const InstanceOptions& instance, const std::string& algo,
                 int r, std::optional<int> b, std::optional<int> l,
                 const std::string& csv_path, const std::string& plot_path,
                 const std::string& plot_kind, bool timing,
                 const std::string& best_known_file) {
  const Graph g = instance.LoadInstanceGraph();
  SweepRequest req;
  req.graph_id = instance.GraphId();
  req.constraint = instance.MakeConstraintSpec();
  req.r = r;
  req.run_common = algo == "common" || algo == "both";
  req.run_replimit = algo == "replimit" || algo == "both";
  req.single_b = b;
  req.single_l = l;
  req.timing = timing;
  if (!best_known_file.empty()) {
    std::ifstream table(best_known_file);
    if (!table) {
      throw std::invalid_argument("cannot open best-known file: " +
                                  best_known_file);
    }
    const BuiltConstraint built = BuildConstraint(req.constraint, g);
    req.best_known = LookupBestKnown(table, req.graph_id, built.id);
  }
  const std::vector<SweepRow> rows = RunSweep(g, req);
  WriteCsvFile(csv_path, rows);
  std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  if (!plot_path.empty()) {
    WritePlotFile(plot_path, rows,
                  plot_kind == "objective" ? PlotKind::kObjective
                                           : PlotKind::kDiversity);
    std::cout << "wrote " << plot_kind << " plot to " << plot_path << "\n";
  }
  return 0;
}

int BoundCommand(const InstanceOptions& instance, int r, bool sharpen) {
  const Graph g = instance.LoadInstanceGraph();
  const BuiltConstraint built =
      BuildConstraint(instance.MakeConstraintSpec(), g);
  std::cout << "graph: " << instance.GraphId() << " (" << g.n()
            << " vertices)\n"
            << "constraint: " << built.id << "\n"
            << "distance-sum ceiling (r=" << r
            << "): " << built.DistanceSumBound(r) << "\n";
  if (built.matroid != nullptr) {
    std::cout << "rank: " << built.rank << "\n";
  }
  if (sharpen) {
    if (built.matroid == nullptr) {
      throw std::invalid_argument("--sharpen needs a matroid constraint");
    }
    // Evaluate the closure-sharpened ceiling along the greedy prefix chain.
    const VertexCoverageObjective f(g);
    const GreedyResult full =
        RunCommonGreedy(f, *built.matroid, {built.rank, std::max(2, r)});
    Solution prefix(g.n());
    std::int64_t best = ClosureSharpenedDistanceSumBound(*built.matroid,
                                                         prefix, r);
    int best_size = 0;
    for (const TraceStep& step : full.trace.steps) {
      if (step.phase != 1) continue;
      prefix.Insert(step.element);
      const std::int64_t bound =
          ClosureSharpenedDistanceSumBound(*built.matroid, prefix, r);
      if (bound < best) {
        best = bound;
        best_size = prefix.size();
      }
    }
    std::cout << "closure-sharpened ceiling: " << best
              << " (at greedy prefix of size " << best_size << ")\n";
  }
  return 0;
}

int OracleCommand(const InstanceOptions& instance, int r,
                  const std::string& alpha_text, int max_ground, int max_r) {
  const Graph g = instance.LoadInstanceGraph();
  const BuiltConstraint built =
      BuildConstraint(instance.MakeConstraintSpec(), g);
  const VertexCoverageObjective f(g);
  const Alpha alpha = ParseAlpha(alpha_text);
  OracleLimits limits;
  limits.max_ground = max_ground;
  limits.max_r = max_r;
  limits.max_diverse_ground = std::min(limits.max_diverse_ground, max_ground);

  const OptimumResult best = ExactOptimum(f, *built.oracle, limits);
  std::cout << "exact optimum: " << best.value << " at "
            << OneBased(best.witness) << "\n";
  if (r >= 1) {
    const DiverseOptimumResult diverse =
        ExactDiverseOptimum(f, *built.oracle, r, alpha, limits);
    std::cout << "exact diverse optimum (r=" << r << ", alpha=" << alpha.num
              << "/" << alpha.den << "): " << diverse.distance_sum << "\n";
    for (const Solution& s : diverse.witness) {
      std::cout << "  " << OneBased(s) << " f=" << f.Value(s) << "\n";
    }
  }
  std::cout << "disjoint approximations (alpha=" << alpha.num << "/"
            << alpha.den
            << "): " << DisjointApproxCount(f, *built.oracle, alpha, limits)
            << "\n";
  return 0;
}

int CheckCommand(const InstanceOptions& instance, int r, std::optional<int> b,
                 std::optional<int> l) {
  const Graph g = instance.LoadInstanceGraph();
  const BuiltConstraint built =
      BuildConstraint(instance.MakeConstraintSpec(), g);
  const VertexCoverageObjective f(g);
  const bool small = g.n() <= OracleLimits{}.max_ground;
  const bool uniform =
      built.matroid != nullptr &&
      dynamic_cast<const UniformMatroid*>(built.matroid) != nullptr;
  CheckTally tally;

  std::optional<std::int64_t> opt;
  if (small) opt = ExactOptimum(f, *built.oracle).value;

  if (built.matroid != nullptr) {
    const int use_b = b.value_or(std::min(1, built.rank));
    const GreedyResult run =
        RunCommonGreedy(f, *built.matroid, {use_b, r});
    bool feasible = true;
    bool contains_prefix = true;
    for (int i = 0; i < r; ++i) {
      feasible = feasible && built.oracle->IsIndependent(run.multiset.solution(i));
      contains_prefix = contains_prefix &&
                        run.trace.phase1.IsSubsetOf(run.multiset.solution(i));
    }
    tally.Report("common: solutions feasible", feasible);
    tally.Report("common: solutions contain the prefix", contains_prefix);
    tally.Report("common: diversity never decreases",
                 Phase2DiversityNondecreasing(run.trace));
    tally.Report("common: distance sum within ceiling",
                 PairwiseDistanceSum(run.multiset) <= built.DistanceSumBound(r));
    if (uniform) {
      tally.Report("common: uniform distance sum exact",
                   CheckUniformExactDiversity(run.multiset, built.rank, use_b));
    } else if (use_b < built.rank) {
      tally.Report("common: matroid diversity floor",
                   CheckMatroidDiversityFloor(run.multiset, *built.matroid,
                                              run.trace.phase1, use_b));
    }
    if (small) {
      const int k = MinDependentSetSize(*built.oracle) - 1;
      tally.Report(
          "common: prefix objective factor",
          CheckCommonPrefixObjective(f.Value(run.trace.phase1), *opt,
                                     uniform ? ConstraintKind::kUniform
                                             : ConstraintKind::kMatroid,
                                     built.rank, use_b, k));
    } else {
      tally.Skip("common: prefix objective factor", "needs a small ground set");
    }
  } else {
    tally.Skip("common: all checks", "needs a matroid constraint");
  }

  {
    const int use_l = l.value_or(1);
    const GreedyResult run = RunRepLimitGreedy(f, *built.oracle, {r, use_l});
    bool feasible = true;
    bool seeded = true;
    bool capped = true;
    for (int i = 0; i < r; ++i) {
      feasible = feasible && built.oracle->IsIndependent(run.multiset.solution(i));
      seeded = seeded && run.multiset.solution(i).contains(run.trace.seed);
    }
    for (int v = 0; v < g.n(); ++v) {
      if (v != run.trace.seed) capped = capped && run.multiset.count(v) <= use_l;
    }
    tally.Report("replimit: solutions feasible", feasible);
    tally.Report("replimit: solutions contain the seed", seeded);
    tally.Report("replimit: representation capped", capped);
    tally.Report("replimit: running diversity floor",
                 CheckRunningDiversityFloor(run.trace, r, use_l));
    tally.Report("replimit: distance sum within ceiling",
                 PairwiseDistanceSum(run.multiset) <= built.DistanceSumBound(r));
    if (built.matroid != nullptr) {
      tally.Report("replimit: balanced growth",
                   CheckBalancedGrowth(run.trace, r, 1));
    }
    std::int64_t min_f = 0;
    for (int i = 0; i < r; ++i) {
      const std::int64_t value = f.Value(run.multiset.solution(i));
      min_f = i == 0 ? value : std::min(min_f, value);
    }
    if (use_l < r) {
      if (uniform) {
        if (small) {
          tally.Report(
              "replimit: uniform objective and diversity floors",
              CheckRepLimitUniformGuarantees(run.multiset, min_f, built.rank,
                                             use_l, built.rank,
                                             MaxValueUpToSize(f, built.rank)));
        } else {
          tally.Report(
              "replimit: uniform diversity floor",
              CheckRepLimitUniformGuarantees(run.multiset, min_f, built.rank,
                                             use_l, 1, 0));
        }
      } else if (built.matroid != nullptr) {
        if (small) {
          tally.Report("replimit: matroid objective and diversity floors",
                       CheckRepLimitMatroidGuarantees(run.multiset, min_f,
                                                      built.rank, use_l, *opt));
        } else {
          tally.Report("replimit: matroid diversity floor",
                       CheckRepLimitMatroidGuarantees(run.multiset, min_f,
                                                      built.rank, use_l, 0));
        }
      } else if (small) {
        const auto* intersection =
            dynamic_cast<const IntersectionConstraint*>(built.oracle.get());
        tally.Report(
            "replimit: intersection objective factor",
            CheckIntersectionObjectiveGuarantee(
                run.multiset, min_f,
                static_cast<int>(intersection->members().size()), use_l,
                MaxFeasibleSize(*built.oracle), *opt));
      } else {
        tally.Skip("replimit: intersection objective factor",
                   "needs a small ground set");
      }
    } else {
      tally.Skip("replimit: guarantee floors", "stated for l < r only");
    }
  }

  std::cout << (tally.failures == 0 ? "all checks passed"
                                    : "some checks FAILED")
            << "\n";
  return tally.failures == 0 ? 0 : 1;
}

int FixturesCommand(int n, int s, int r, int l) {
  CheckTally tally;
  // Cyclic shifts meet the ceiling when solutions cover at most half the
  // ground set.
  {
    const auto p = CyclicUniformFixture(n, s, r);
    const std::int64_t sum = PairwiseDistanceSum(p);
    const std::int64_t ceiling = MaxDistanceSum(n, s, r);
    std::cout << "cyclic family: distance sum " << sum << ", ceiling "
              << ceiling << "\n";
    if (2 * s <= n) {
      tally.Report("cyclic family attains the ceiling", sum == ceiling);
    } else {
      tally.Report("cyclic family stays below the ceiling", sum <= ceiling);
    }
  }
  // Decreasing weights under a uniform cap.
  {
    const ModularObjective f = ModularDecreasingFixture(n);
    const int k_cap = std::max(1, s);
    const GreedyResult run = RunRepLimitGreedy(f, UniformMatroid(n, k_cap),
                                               {r, l});
    const std::int64_t h = std::min<std::int64_t>(
        static_cast<std::int64_t>(r) * (k_cap - 1),
        static_cast<std::int64_t>(l) * (n - 1));
    const std::int64_t c = h % l;
    const std::int64_t expected =
        static_cast<std::int64_t>(l) * (r - l) * (h / l) + c * (r - c);
    const std::int64_t sum = PairwiseDistanceSum(run.multiset);
    std::cout << "decreasing weights, uniform cap " << k_cap
              << ": distance sum " << sum << ", floor " << expected << "\n";
    tally.Report("uniform floor met with equality", sum == expected);
  }
  // Decreasing weights under the tail-block matroid.
  {
    const ModularObjective f = ModularDecreasingFixture(n);
    const GreedyResult run =
        RunRepLimitGreedy(f, TailBlockMatroid(n, s), {r, l});
    const std::int64_t expected =
        static_cast<std::int64_t>(l) * (r - l) * (s - 1);
    const std::int64_t sum = PairwiseDistanceSum(run.multiset);
    std::cout << "decreasing weights, tail-block rank " << s
              << ": distance sum " << sum << ", floor " << expected << "\n";
    tally.Report("tail-block floor met with equality", sum == expected);
  }
  return tally.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diverse near-optimal solutions for monotone submodular "
               "maximization under matroid constraints"};
  app.require_subcommand(1);

  InstanceOptions run_inst;
  std::string run_algo = "common";
  int run_r = 2;
  std::optional<int> run_b;
  std::optional<int> run_l;
  auto* run = app.add_subcommand("run", "run one algorithm once");
  AddInstanceOptions(run, &run_inst);
  run->add_option("--algo", run_algo, "common | replimit")
      ->check(CLI::IsMember({"common", "replimit"}));
  run->add_option("--r", run_r, "number of solutions")->required();
  run->add_option("--b", run_b, "common-element count (common)");
  run->add_option("--l", run_l, "representation limit (replimit)");

  InstanceOptions sweep_inst;
  std::string sweep_algo = "both";
  int sweep_r = 2;
  std::optional<int> sweep_b;
  std::optional<int> sweep_l;
  bool sweep_all = false;
  bool sweep_timing = false;
  std::string sweep_csv;
  std::string sweep_plot;
  std::string sweep_plot_kind = "diversity";
  std::string sweep_best_known;
  auto* sweep = app.add_subcommand("sweep", "sweep a parameter range to CSV");
  AddInstanceOptions(sweep, &sweep_inst);
  sweep->add_option("--algo", sweep_algo, "common | replimit | both")
      ->check(CLI::IsMember({"common", "replimit", "both"}));
  sweep->add_option("--r", sweep_r, "number of solutions")->required();
  sweep->add_option("--b", sweep_b, "single common-element count");
  sweep->add_option("--l", sweep_l, "single representation limit");
  sweep->add_flag("--all", sweep_all,
                  "sweep the whole range (default when --b/--l are absent)");
  sweep->add_option("--csv", sweep_csv, "output CSV path")->required();
  sweep->add_option("--plot", sweep_plot, "output SVG path");
  sweep->add_option("--plot-kind", sweep_plot_kind, "objective | diversity")
      ->check(CLI::IsMember({"objective", "diversity"}));
  sweep->add_flag("--timing", sweep_timing,
                  "record wall time (breaks byte-identical reruns)");
  sweep->add_option("--best-known", sweep_best_known,
                    "best-known table (graph constraint value per line)");

  InstanceOptions bound_inst;
  int bound_r = 2;
  bool bound_sharpen = false;
  auto* bound = app.add_subcommand("bound", "print distance-sum ceilings");
  AddInstanceOptions(bound, &bound_inst);
  bound->add_option("--r", bound_r, "number of solutions")->required();
  bound->add_flag("--sharpen", bound_sharpen,
                  "minimize the closure-sharpened ceiling over greedy "
                  "prefixes");

  InstanceOptions oracle_inst;
  int oracle_r = 0;
  std::string oracle_alpha = "0/1";
  int oracle_max_ground = 12;
  int oracle_max_r = 3;
  auto* oracle = app.add_subcommand("oracle", "desk-scale exact optima");
  AddInstanceOptions(oracle, &oracle_inst);
  oracle->add_option("--r", oracle_r, "diverse-optimum multiset size");
  oracle->add_option("--alpha", oracle_alpha, "threshold ratio N/D");
  oracle->add_option("--max-ground", oracle_max_ground,
                     "enumeration refusal threshold");
  oracle->add_option("--max-r", oracle_max_r, "multiset refusal threshold");

  InstanceOptions check_inst;
  int check_r = 2;
  std::optional<int> check_b;
  std::optional<int> check_l;
  auto* check = app.add_subcommand(
      "check", "run both algorithms and verify their guarantees");
  AddInstanceOptions(check, &check_inst);
  check->add_option("--r", check_r, "number of solutions")->required();
  check->add_option("--b", check_b, "common-element count");
  check->add_option("--l", check_l, "representation limit");

  int fx_n = 8;
  int fx_s = 3;
  int fx_r = 4;
  int fx_l = 2;
  auto* fixtures = app.add_subcommand(
      "fixtures", "evaluate the tightness families against their formulas");
  fixtures->add_option("--n", fx_n, "ground-set size");
  fixtures->add_option("--s", fx_s, "solution size / rank parameter");
  fixtures->add_option("--r", fx_r, "number of solutions");
  fixtures->add_option("--l", fx_l, "representation limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return RunCommand(run_inst, run_algo, run_r, run_b, run_l);
    }
    if (sweep->parsed()) {
      return SweepCommand(sweep_inst, sweep_algo, sweep_r, sweep_b, sweep_l,
                          sweep_csv, sweep_plot, sweep_plot_kind, sweep_timing,
                          sweep_best_known);
    }
    if (bound->parsed()) {
      return BoundCommand(bound_inst, bound_r, bound_sharpen);
    }
    if (oracle->parsed()) {
      return OracleCommand(oracle_inst, oracle_r, oracle_alpha,
                           oracle_max_ground, oracle_max_r);
    }
    if (check->parsed()) {
      return CheckCommand(check_inst, check_r, check_b, check_l);
    }
    if (fixtures->parsed()) {
      return FixturesCommand(fx_n, fx_s, fx_r, fx_l);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

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

#ifndef DIVGREEDY_SWEEP_H_
#define DIVGREEDY_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divgreedy/graph.h"
#include "divgreedy/matroid.h"

namespace divgreedy {

// Partition matroid over consecutive vertices sorted by degree (ascending,
// ties to the smaller id; `descending` reverses the order). Block 0 takes
// the first n - (k-1) * floor(n/k) vertices, every later block floor(n/k).
PartitionMatroid DegreePartition(const Graph& g, int blocks,
                                 const std::vector<int>& caps,
                                 bool descending = false);

// Declarative constraint description, resolved against a concrete graph.
struct ConstraintSpec {
  enum class Kind { kUniform, kPartitionFile, kDegreePartition, kIntersection };

  Kind kind = Kind::kUniform;
  int uniform_cap = 0;
  std::string partition_path;
  int degree_blocks = 0;
  std::vector<int> degree_caps;
  bool degree_descending = false;
  std::vector<ConstraintSpec> members;  // for kIntersection

  static ConstraintSpec Uniform(int cap);

  // Member syntax used on the command line:
  //   uniform:K | partition:FILE | degree:K:c1,c2,... | degree-desc:K:...
  static ConstraintSpec Parse(const std::string& text);
};

// A constraint spec bound to a graph.
struct BuiltConstraint {
  std::shared_ptr<const IndependenceOracle> oracle;
  const Matroid* matroid = nullptr;  // set when the oracle is a matroid
  std::string id;                    // e.g. "U10", "P15", "U5+P3"
  int rank = 0;                      // matroid rank; 0 for intersections
  // Ground-set decompositions backing the distance-sum ceiling; for an
  // intersection the ceiling is the smallest member ceiling.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> bound_parts;

  std::int64_t DistanceSumBound(int r) const;
};

BuiltConstraint BuildConstraint(const ConstraintSpec& spec, const Graph& g);

struct SweepRow {
  std::string graph;
  std::string constraint;
  std::string algo;  // "common" or "replimit"
  int param = 0;     // common-element count b, or representation limit l
  int r = 0;
  std::int64_t min_f = 0;
  double mean_f = 0.0;
  std::int64_t ss = 0;
  std::int64_t ss_bound = 0;
  std::int64_t best_known = 0;
  std::int64_t f_calls = 0;
  std::int64_t indep_calls = 0;
  std::int64_t ms = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepRequest {
  std::string graph_id;
  ConstraintSpec constraint;
  int r = 2;
  bool run_common = true;
  bool run_replimit = true;
  std::optional<int> single_b;  // otherwise all b in [0, rank]
  std::optional<int> single_l;  // otherwise all l in [1, r]
  // Wall time is only reported on request; with timing off the ms column is
  // zero and repeated invocations are byte-identical.
  bool timing = false;
  std::optional<std::int64_t> best_known;
};

// One row per (algorithm, parameter value), algorithms in (common, replimit)
// order, parameters ascending. The best-known column is, in order of
// preference: the caller-supplied value; the exact optimum when the ground
// set allows enumeration; otherwise the best single solution seen across
// the whole sweep. A failing run is reported on stderr and skipped.
std::vector<SweepRow> RunSweep(const Graph& g, const SweepRequest& req);

// CSV schema:
//   graph,constraint,algo,param,r,min_f,mean_f,ss,ss_bound,best_known,
//   f_calls,indep_calls,ms
// UTF-8, LF line ends, %.6f for the mean, plain integers elsewhere.
void WriteCsv(std::ostream& out, std::span<const SweepRow> rows);
void WriteCsvFile(const std::string& path, std::span<const SweepRow> rows);
std::vector<SweepRow> ParseCsv(std::istream& in);

// Looks up a `graph constraint value` line in a best-known table.
std::optional<std::int64_t> LookupBestKnown(std::istream& in,
                                            const std::string& graph_id,
                                            const std::string& constraint_id);

}  // namespace divgreedy

#endif  // DIVGREEDY_SWEEP_H_

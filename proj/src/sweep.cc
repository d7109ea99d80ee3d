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

#include "divgreedy/sweep.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "divgreedy/brute_force.h"
#include "divgreedy/common_greedy.h"
#include "divgreedy/diversity.h"
#include "divgreedy/objective.h"
#include "divgreedy/replimit_greedy.h"

namespace divgreedy {

PartitionMatroid DegreePartition(const Graph& g, int blocks,
                                 const std::vector<int>& caps,
                                 bool descending) {
  const int n = g.n();
  if (blocks < 1 || blocks > n) {
    throw std::invalid_argument("DegreePartition: block count outside [1, n]");
  }
  if (static_cast<int>(caps.size()) != blocks) {
    throw std::invalid_argument("DegreePartition: need one cap per block");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&g, descending](int a, int b) {
    const int da = g.Degree(a);
    const int db = g.Degree(b);
    if (da != db) return descending ? da > db : da < db;
    return a < b;
  });
  // Block 0 absorbs the remainder; all later blocks hold floor(n/k).
  const int base = n / blocks;
  const int first = n - (blocks - 1) * base;
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  int at = 0;
  for (int b = 0; b < blocks; ++b) {
    const int len = b == 0 ? first : base;
    for (int i = 0; i < len; ++i) {
      block_of[static_cast<std::size_t>(order[static_cast<std::size_t>(at++)])] = b;
    }
  }
  return PartitionMatroid(std::move(block_of), caps);
}

ConstraintSpec ConstraintSpec::Uniform(int cap) {
  ConstraintSpec spec;
  spec.kind = Kind::kUniform;
  spec.uniform_cap = cap;
  return spec;
}

namespace {

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    out.push_back(std::stoi(token));
  }
  return out;
}

}  // namespace

ConstraintSpec ConstraintSpec::Parse(const std::string& text) {
  ConstraintSpec spec;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (head == "uniform") {
    spec.kind = Kind::kUniform;
    spec.uniform_cap = std::stoi(rest);
  } else if (head == "partition") {
    spec.kind = Kind::kPartitionFile;
    spec.partition_path = rest;
  } else if (head == "degree" || head == "degree-desc") {
    spec.kind = Kind::kDegreePartition;
    spec.degree_descending = head == "degree-desc";
    const auto second = rest.find(':');
    if (second == std::string::npos) {
      throw std::invalid_argument("constraint spec needs degree:K:caps");
    }
    spec.degree_blocks = std::stoi(rest.substr(0, second));
    spec.degree_caps = ParseIntList(rest.substr(second + 1));
  } else {
    throw std::invalid_argument("unknown constraint spec: " + text);
  }
  return spec;
}

std::int64_t BuiltConstraint::DistanceSumBound(int r) const {
  std::int64_t best = -1;
  for (const auto& [sizes, caps] : bound_parts) {
    const std::int64_t bound = PartitionDistanceSumBound(sizes, caps, r);
    if (best < 0 || bound < best) best = bound;
  }
  return best < 0 ? 0 : best;
}

BuiltConstraint BuildConstraint(const ConstraintSpec& spec, const Graph& g) {
  BuiltConstraint built;
  switch (spec.kind) {
    case ConstraintSpec::Kind::kUniform: {
      auto oracle = std::make_shared<UniformMatroid>(g.n(), spec.uniform_cap);
      built.matroid = oracle.get();
      built.oracle = std::move(oracle);
      built.rank = std::min(spec.uniform_cap, g.n());
      built.id = "U" + std::to_string(spec.uniform_cap);
      built.bound_parts.push_back({{g.n()}, {built.rank}});
      break;
    }
    case ConstraintSpec::Kind::kPartitionFile:
    case ConstraintSpec::Kind::kDegreePartition: {
      auto oracle = std::make_shared<PartitionMatroid>(
          spec.kind == ConstraintSpec::Kind::kPartitionFile
              ? LoadPartitionFile(spec.partition_path, g.n())
              : DegreePartition(g, spec.degree_blocks, spec.degree_caps,
                                spec.degree_descending));
      built.matroid = oracle.get();
      built.rank = 0;
      for (int i = 0; i < oracle->num_blocks(); ++i) {
        built.rank += std::min(oracle->caps()[static_cast<std::size_t>(i)],
                               oracle->block_sizes()[static_cast<std::size_t>(i)]);
      }
      built.id = "P" + std::to_string(built.rank);
      built.bound_parts.push_back({oracle->block_sizes(), oracle->caps()});
      built.oracle = std::move(oracle);
      break;
    }
    case ConstraintSpec::Kind::kIntersection: {
      std::vector<std::shared_ptr<const IndependenceOracle>> members;
      std::string id;
      for (const ConstraintSpec& member_spec : spec.members) {
        BuiltConstraint member = BuildConstraint(member_spec, g);
        if (!id.empty()) id += "+";
        id += member.id;
        for (auto& part : member.bound_parts) {
          built.bound_parts.push_back(std::move(part));
        }
        members.push_back(std::move(member.oracle));
      }
      built.oracle = std::make_shared<IntersectionConstraint>(std::move(members));
      built.matroid = nullptr;
      built.rank = 0;
      built.id = id;
      break;
    }
  }
  return built;
}

namespace {

struct RunStats {
  std::int64_t min_f = 0;
  double mean_f = 0.0;
  std::int64_t best_f = 0;
  std::int64_t ss = 0;
  std::int64_t f_calls = 0;
  std::int64_t indep_calls = 0;
  std::int64_t ms = 0;
};

RunStats RunOnce(const Graph& g, const ConstraintSpec& spec,
                 const std::string& algo, int param, int r, bool timing) {
  // Fresh oracles per run keep the call counters per-row.
  const BuiltConstraint built = BuildConstraint(spec, g);
  const VertexCoverageObjective f(g);
  const auto start = std::chrono::steady_clock::now();
  GreedyResult result = [&] {
    if (algo == "common") {
      if (built.matroid == nullptr) {
        throw std::invalid_argument(
            "the common-element algorithm needs a matroid constraint");
      }
      return RunCommonGreedy(f, *built.matroid, CommonGreedyConfig{param, r});
    }
    return RunRepLimitGreedy(f, *built.oracle, RepLimitConfig{r, param});
  }();
  const auto stop = std::chrono::steady_clock::now();

  RunStats stats;
  stats.f_calls = f.call_count();  // reporting below is not charged
  stats.indep_calls = built.oracle->call_count();
  std::int64_t sum = 0;
  for (int i = 0; i < r; ++i) {
    const std::int64_t value = f.Value(result.multiset.solution(i));
    sum += value;
    stats.min_f = i == 0 ? value : std::min(stats.min_f, value);
    stats.best_f = std::max(stats.best_f, value);
  }
  stats.mean_f = static_cast<double>(sum) / r;
  stats.ss = PairwiseDistanceSum(result.multiset);
  if (timing) {
    stats.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                   .count();
  }
  return stats;
}

}  // namespace

std::vector<SweepRow> RunSweep(const Graph& g, const SweepRequest& req) {
  if (req.r < 2) throw std::invalid_argument("RunSweep: r must be >= 2");
  const BuiltConstraint probe = BuildConstraint(req.constraint, g);
  const std::int64_t ss_bound = probe.DistanceSumBound(req.r);

  struct Planned {
    std::string algo;
    int param;
  };
  std::vector<Planned> plan;
  if (req.run_common) {
    if (probe.matroid == nullptr) {
      throw std::invalid_argument(
          "RunSweep: the common-element algorithm needs a matroid constraint");
    }
    if (req.single_b) {
      plan.push_back({"common", *req.single_b});
    } else {
      for (int b = 0; b <= probe.rank; ++b) plan.push_back({"common", b});
    }
  }
  if (req.run_replimit) {
    if (req.single_l) {
      plan.push_back({"replimit", *req.single_l});
    } else {
      for (int l = 1; l <= req.r; ++l) plan.push_back({"replimit", l});
    }
  }

  std::vector<SweepRow> rows;
  std::int64_t best_seen = 0;
  for (const Planned& job : plan) {
    try {
      const RunStats stats =
          RunOnce(g, req.constraint, job.algo, job.param, req.r, req.timing);
      SweepRow row;
      row.graph = req.graph_id;
      row.constraint = probe.id;
      row.algo = job.algo;
      row.param = job.param;
      row.r = req.r;
      row.min_f = stats.min_f;
      row.mean_f = stats.mean_f;
      row.ss = stats.ss;
      row.ss_bound = ss_bound;
      row.f_calls = stats.f_calls;
      row.indep_calls = stats.indep_calls;
      row.ms = stats.ms;
      best_seen = std::max(best_seen, stats.best_f);
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      std::cerr << "warning: sweep row (" << job.algo << ", " << job.param
                << ") failed: " << e.what() << "\n";
    }
  }

  std::int64_t best_known = 0;
  if (req.best_known) {
    best_known = *req.best_known;
  } else if (g.n() <= OracleLimits{}.max_ground) {
    const VertexCoverageObjective f(g);
    best_known = ExactOptimum(f, *probe.oracle).value;
  } else {
    best_known = best_seen;
  }
  for (SweepRow& row : rows) row.best_known = best_known;
  return rows;
}

void WriteCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "graph,constraint,algo,param,r,min_f,mean_f,ss,ss_bound,best_known,"
         "f_calls,indep_calls,ms\n";
  char mean[32];
  for (const SweepRow& row : rows) {
    std::snprintf(mean, sizeof(mean), "%.6f", row.mean_f);
    out << row.graph << ',' << row.constraint << ',' << row.algo << ','
        << row.param << ',' << row.r << ',' << row.min_f << ',' << mean << ','
        << row.ss << ',' << row.ss_bound << ',' << row.best_known << ','
        << row.f_calls << ',' << row.indep_calls << ',' << row.ms << '\n';
  }
}

void WriteCsvFile(const std::string& path, std::span<const SweepRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write CSV file: " + path);
  WriteCsv(out, rows);
}

std::vector<SweepRow> ParseCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("CSV: missing header");
  }
  if (line !=
      "graph,constraint,algo,param,r,min_f,mean_f,ss,ss_bound,best_known,"
      "f_calls,indep_calls,ms") {
    throw std::invalid_argument("CSV: unexpected header: " + line);
  }
  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream split(line);
    while (std::getline(split, field, ',')) fields.push_back(field);
    if (fields.size() != 13) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected 13 fields");
    }
    SweepRow row;
    row.graph = fields[0];
    row.constraint = fields[1];
    row.algo = fields[2];
    row.param = std::stoi(fields[3]);
    row.r = std::stoi(fields[4]);
    row.min_f = std::stoll(fields[5]);
    row.mean_f = std::stod(fields[6]);
    row.ss = std::stoll(fields[7]);
    row.ss_bound = std::stoll(fields[8]);
    row.best_known = std::stoll(fields[9]);
    row.f_calls = std::stoll(fields[10]);
    row.indep_calls = std::stoll(fields[11]);
    row.ms = std::stoll(fields[12]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::int64_t> LookupBestKnown(std::istream& in,
                                            const std::string& graph_id,
                                            const std::string& constraint_id) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string graph, constraint;
    std::int64_t value = 0;
    if (!(fields >> graph >> constraint >> value)) continue;
    if (graph == graph_id && constraint == constraint_id) return value;
  }
  return std::nullopt;
}

}  // namespace divgreedy

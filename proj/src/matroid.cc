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

#include "divgreedy/matroid.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace divgreedy {

UniformMatroid::UniformMatroid(int ground_size, int rank_cap)
    : Matroid(ground_size), rank_cap_(rank_cap) {
  if (ground_size < 0 || rank_cap < 0) {
    throw std::invalid_argument("UniformMatroid: negative size or cap");
  }
}

bool UniformMatroid::IsIndependentImpl(const Solution& x) const {
  return x.size() <= rank_cap_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of,
                                   std::vector<int> caps)
    : Matroid(static_cast<int>(block_of.size())),
      block_of_(std::move(block_of)),
      caps_(std::move(caps)),
      block_sizes_(caps_.size(), 0) {
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(caps_.size())) {
      throw std::invalid_argument("PartitionMatroid: block index out of range");
    }
    ++block_sizes_[static_cast<std::size_t>(b)];
  }
  for (int c : caps_) {
    if (c < 0) throw std::invalid_argument("PartitionMatroid: negative cap");
  }
}

bool PartitionMatroid::IsIndependentImpl(const Solution& x) const {
  std::vector<int> used(caps_.size(), 0);
  bool ok = true;
  x.ForEach([this, &used, &ok](int v) {
    const int b = block_of_[static_cast<std::size_t>(v)];
    if (++used[static_cast<std::size_t>(b)] > caps_[static_cast<std::size_t>(b)])
      ok = false;
  });
  return ok;
}

ExplicitMatroid::ExplicitMatroid(
    int ground_size, const std::vector<std::uint32_t>& independent_masks)
    : Matroid(ground_size) {
  if (ground_size < 0 || ground_size > 20) {
    throw std::invalid_argument("ExplicitMatroid: ground size must be in [0, 20]");
  }
  member_.assign(1ull << ground_size, false);
  for (std::uint32_t m : independent_masks) {
    if (m >= member_.size()) {
      throw std::invalid_argument("ExplicitMatroid: mask out of range");
    }
    member_[m] = true;
  }
}

bool ExplicitMatroid::IsIndependentImpl(const Solution& x) const {
  return member_[static_cast<std::uint32_t>(x.mask())];
}

ExplicitMatroid ExplicitMatroid::Materialize(const IndependenceOracle& oracle) {
  const int n = oracle.ground_size();
  if (n > 20) {
    throw std::invalid_argument("Materialize: ground size must be <= 20");
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (oracle.IsIndependent(Solution::FromMask(n, m))) masks.push_back(m);
  }
  return ExplicitMatroid(n, masks);
}

IntersectionConstraint::IntersectionConstraint(
    std::vector<std::shared_ptr<const IndependenceOracle>> members)
    : IndependenceOracle(members.empty() ? 0 : members[0]->ground_size()),
      members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("IntersectionConstraint: no members");
  }
  for (const auto& m : members_) {
    if (m->ground_size() != ground_size()) {
      throw std::invalid_argument(
          "IntersectionConstraint: inconsistent ground sizes");
    }
  }
}

bool IntersectionConstraint::IsIndependentImpl(const Solution& x) const {
  for (const auto& m : members_) {
    if (!m->IsIndependent(x)) return false;
  }
  return true;
}

int RankOf(const Matroid& m, const Solution& x) {
  Solution kept(m.ground_size());
  x.ForEach([&m, &kept](int v) {
    kept.Insert(v);
    if (!m.IsIndependent(kept)) kept.Erase(v);
  });
  return kept.size();
}

int RankOf(const Matroid& m) {
  return RankOf(m, Solution::Full(m.ground_size()));
}

Solution ClosureOf(const Matroid& m, const Solution& x) {
  if (!m.IsIndependent(x)) {
    throw std::invalid_argument("ClosureOf: x must be independent");
  }
  // For independent x, v lies in the closure iff v ∈ x or x ∪ {v} is
  // dependent.
  Solution closure = x;
  Solution probe = x;
  for (int v = 0; v < m.ground_size(); ++v) {
    if (x.contains(v)) continue;
    probe.Insert(v);
    if (!m.IsIndependent(probe)) closure.Insert(v);
    probe.Erase(v);
  }
  return closure;
}

std::vector<int> FeasibleExtensions(const IndependenceOracle& c,
                                    const Solution& z) {
  std::vector<int> out;
  Solution probe = z;
  for (int u = 0; u < c.ground_size(); ++u) {
    if (z.contains(u)) continue;
    probe.Insert(u);
    if (c.IsIndependent(probe)) out.push_back(u);
    probe.Erase(u);
  }
  return out;
}

bool HasLoops(const IndependenceOracle& c) {
  Solution probe(c.ground_size());
  for (int v = 0; v < c.ground_size(); ++v) {
    probe.Insert(v);
    const bool dependent = !c.IsIndependent(probe);
    probe.Erase(v);
    if (dependent) return true;
  }
  return false;
}

std::string AxiomsReport::ToString() const {
  std::ostringstream out;
  switch (violation) {
    case Violation::kNone:
      out << "ok";
      break;
    case Violation::kEmptySet:
      out << "empty set not independent";
      break;
    case Violation::kHereditary:
      out << "hereditary violation: " << x << " subset of independent " << y;
      break;
    case Violation::kExchange:
      out << "exchange violation: no element of " << y << " extends " << x;
      break;
  }
  return out.str();
}

AxiomsReport CheckMatroidAxioms(const ExplicitMatroid& m) {
  const int n = m.ground_size();
  AxiomsReport report;
  if (!m.independent(0)) {
    report.ok = false;
    report.violation = AxiomsReport::Violation::kEmptySet;
    return report;
  }
  const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);
  // Hereditary: removing one element from an independent set must stay
  // independent; induction covers arbitrary subsets.
  for (std::uint32_t y = 1; y < limit; ++y) {
    if (!m.independent(y)) continue;
    for (std::uint32_t bits = y; bits != 0; bits &= bits - 1) {
      const std::uint32_t x = y ^ (bits & (~bits + 1));
      if (!m.independent(x)) {
        report.ok = false;
        report.violation = AxiomsReport::Violation::kHereditary;
        report.x = x;
        report.y = y;
        return report;
      }
    }
  }
  // Exchange: group independent sets by size and compare adjacent sizes.
  // Sets of size k must be extendable from any independent set of size > k.
  std::vector<std::uint32_t> independent;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (m.independent(s)) independent.push_back(s);
  }
  for (std::uint32_t x : independent) {
    const int sx = std::popcount(x);
    for (std::uint32_t y : independent) {
      if (sx >= std::popcount(y)) continue;
      bool extended = false;
      for (std::uint32_t bits = y & ~x; bits != 0; bits &= bits - 1) {
        const std::uint32_t e = bits & (~bits + 1);
        if (m.independent(x | e)) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        report.ok = false;
        report.violation = AxiomsReport::Violation::kExchange;
        report.x = x;
        report.y = y;
        return report;
      }
    }
  }
  return report;
}

PartitionMatroid ParsePartitionFile(std::istream& in, int ground_size) {
  std::vector<int> block_of(static_cast<std::size_t>(ground_size), -1);
  std::vector<int> caps;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("partition file line " +
                                  std::to_string(line_no) + ": missing ':'");
    }
    int cap = 0;
    try {
      cap = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw std::invalid_argument("partition file line " +
                                  std::to_string(line_no) + ": bad cap");
    }
    const int block = static_cast<int>(caps.size());
    caps.push_back(cap);
    std::istringstream ids(line.substr(colon + 1));
    int id = 0;
    while (ids >> id) {
      if (id < 1 || id > ground_size) {
        throw std::invalid_argument("partition file line " +
                                    std::to_string(line_no) +
                                    ": id out of range: " + std::to_string(id));
      }
      if (block_of[static_cast<std::size_t>(id - 1)] != -1) {
        throw std::invalid_argument("partition file line " +
                                    std::to_string(line_no) +
                                    ": id assigned twice: " +
                                    std::to_string(id));
      }
      block_of[static_cast<std::size_t>(id - 1)] = block;
    }
    if (!ids.eof()) {
      throw std::invalid_argument("partition file line " +
                                  std::to_string(line_no) + ": bad id list");
    }
  }
  for (int v = 0; v < ground_size; ++v) {
    if (block_of[static_cast<std::size_t>(v)] == -1) {
      throw std::invalid_argument("partition file: element " +
                                  std::to_string(v + 1) + " unassigned");
    }
  }
  return PartitionMatroid(std::move(block_of), std::move(caps));
}

PartitionMatroid LoadPartitionFile(const std::string& path, int ground_size) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open partition file: " + path);
  }
  return ParsePartitionFile(in, ground_size);
}

}  // namespace divgreedy

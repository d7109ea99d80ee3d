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

#include "divgreedy/objective.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace divgreedy {

std::int64_t ValueOracle::MarginalGain(const Solution& x, int v) const {
  if (x.contains(v)) {
    throw std::invalid_argument("MarginalGain: element already present");
  }
  calls_.Bump();
  Solution grown = x;
  grown.Insert(v);
  return ValueImpl(grown) - ValueImpl(x);
}

namespace {

// Fallback evaluation state: keeps the set and re-evaluates f on probes.
class GenericState : public ValueOracle::Incremental {
 public:
  GenericState(const ValueOracle* owner, Solution z)
      : Incremental(owner), z_(std::move(z)) {
    value_ = EvalRaw(z_);
  }

  std::unique_ptr<Incremental> Clone() const override {
    return std::unique_ptr<Incremental>(new GenericState(*this));
  }

 protected:
  std::int64_t GainImpl(int v) const override {
    Solution& z = const_cast<Solution&>(z_);
    z.Insert(v);
    const std::int64_t grown = EvalRaw(z);
    z.Erase(v);
    return grown - value_;
  }

  void AddImpl(int v) override { z_.Insert(v); }

 private:
  Solution z_;
};

}  // namespace

std::unique_ptr<ValueOracle::Incremental> ValueOracle::MakeIncremental() const {
  return std::make_unique<GenericState>(this, Solution(ground_size_));
}

VertexCoverageObjective::VertexCoverageObjective(const Graph& graph)
    : ValueOracle(graph.n()), words_(graph.words_per_row()) {
  closed_.assign(static_cast<std::size_t>(graph.n()) * words_, 0);
  for (int v = 0; v < graph.n(); ++v) {
    const auto row = graph.Row(v);
    const std::size_t base = static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) closed_[base + w] = row[w];
    closed_[base + (v >> 6)] |= 1ull << (v & 63);
  }
}

std::int64_t VertexCoverageObjective::ValueImpl(const Solution& x) const {
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(words_), 0);
  x.ForEach([this, &covered](int v) {
    const std::size_t base = static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) covered[w] |= closed_[base + w];
  });
  std::int64_t total = 0;
  for (std::uint64_t w : covered) total += std::popcount(w);
  return total;
}

class VertexCoverageObjective::CoverageState : public ValueOracle::Incremental {
 public:
  explicit CoverageState(const VertexCoverageObjective* owner)
      : Incremental(owner),
        cov_(owner),
        covered_(static_cast<std::size_t>(owner->words_), 0) {}

  std::unique_ptr<Incremental> Clone() const override {
    return std::unique_ptr<Incremental>(new CoverageState(*this));
  }

 protected:
  std::int64_t GainImpl(int v) const override {
    const std::size_t base = static_cast<std::size_t>(v) * cov_->words_;
    std::int64_t gain = 0;
    for (int w = 0; w < cov_->words_; ++w) {
      gain += std::popcount(cov_->closed_[base + w] & ~covered_[w]);
    }
    return gain;
  }

  void AddImpl(int v) override {
    const std::size_t base = static_cast<std::size_t>(v) * cov_->words_;
    for (int w = 0; w < cov_->words_; ++w) covered_[w] |= cov_->closed_[base + w];
  }

 private:
  const VertexCoverageObjective* cov_;
  std::vector<std::uint64_t> covered_;
};

std::unique_ptr<ValueOracle::Incremental>
VertexCoverageObjective::MakeIncremental() const {
  return std::make_unique<CoverageState>(this);
}

ModularObjective::ModularObjective(std::vector<std::int64_t> weights)
    : ValueOracle(static_cast<int>(weights.size())),
      weights_(std::move(weights)) {
  for (std::int64_t w : weights_) {
    if (w < 0) throw std::invalid_argument("ModularObjective: negative weight");
  }
}

std::int64_t ModularObjective::ValueImpl(const Solution& x) const {
  std::int64_t total = 0;
  x.ForEach([this, &total](int v) { total += weights_[static_cast<std::size_t>(v)]; });
  return total;
}

class ModularObjective::ModularState : public ValueOracle::Incremental {
 public:
  explicit ModularState(const ModularObjective* owner)
      : Incremental(owner), mod_(owner) {}

  std::unique_ptr<Incremental> Clone() const override {
    return std::unique_ptr<Incremental>(new ModularState(*this));
  }

 protected:
  std::int64_t GainImpl(int v) const override {
    return mod_->weights_[static_cast<std::size_t>(v)];
  }
  void AddImpl(int) override {}

 private:
  const ModularObjective* mod_;
};

std::unique_ptr<ValueOracle::Incremental> ModularObjective::MakeIncremental()
    const {
  return std::make_unique<ModularState>(this);
}

std::string CertifyReport::ToString() const {
  std::ostringstream out;
  switch (violation) {
    case Violation::kNone:
      out << "ok";
      break;
    case Violation::kMonotone:
      out << "monotonicity violation: f decreases from subset " << x << " to "
          << y;
      break;
    case Violation::kSubmodular:
      out << "submodularity violation: marginal gain of " << element
          << " grows from " << x << " to superset " << y;
      break;
  }
  return out.str();
}

CertifyReport CertifyMonotoneSubmodular(const ValueOracle& f, int max_n) {
  const int n = f.ground_size();
  if (n > max_n) {
    throw std::invalid_argument(
        "CertifyMonotoneSubmodular: ground set too large");
  }
  const std::uint32_t limit = 1u << n;
  std::vector<std::int64_t> value(limit);
  for (std::uint32_t s = 0; s < limit; ++s) {
    value[s] = f.Value(Solution::FromMask(n, s));
  }
  CertifyReport report;
  // Monotone: every subset x of every y must satisfy f(x) <= f(y);
  // submodular: for x ⊆ y and v outside y, the gain at y cannot exceed the
  // gain at x. Submask enumeration covers all pairs.
  for (std::uint32_t y = 0; y < limit; ++y) {
    for (std::uint32_t x = y;; x = (x - 1) & y) {
      if (value[x] > value[y]) {
        report.ok = false;
        report.violation = CertifyReport::Violation::kMonotone;
        report.x = x;
        report.y = y;
        return report;
      }
      for (std::uint32_t rest = ~y & (limit - 1); rest != 0;
           rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        if (value[y | bit] - value[y] > value[x | bit] - value[x]) {
          report.ok = false;
          report.violation = CertifyReport::Violation::kSubmodular;
          report.x = x;
          report.y = y;
          report.element = std::countr_zero(bit);
          return report;
        }
      }
      if (x == 0) break;
    }
  }
  return report;
}

}  // namespace divgreedy

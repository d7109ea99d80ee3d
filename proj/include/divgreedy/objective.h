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

#ifndef DIVGREEDY_OBJECTIVE_H_
#define DIVGREEDY_OBJECTIVE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "divgreedy/graph.h"
#include "divgreedy/matroid.h"
#include "divgreedy/solution.h"

namespace divgreedy {

// A set function f with f(∅) = 0, given as a value oracle. The shipped
// objectives are integer-valued and their values are compared exactly;
// no floating point enters any tie-break.
//
// Every evaluation — whole-set or marginal — counts as one oracle call, so
// algorithm complexity can be metered in the value-oracle model.
class ValueOracle {
 public:
  // Per-solution evaluation state for a growing set. Gains are charged one
  // oracle call each; the current value is cached and free to read.
  class Incremental {
   public:
    virtual ~Incremental() = default;

    std::int64_t value() const { return value_; }

    // f(z ∪ {v}) - f(z) for v outside z. One oracle call.
    std::int64_t GainOf(int v) const {
      owner_->calls_.Bump();
      return GainImpl(v);
    }

    // Grows z by v. One oracle call.
    void Add(int v) {
      owner_->calls_.Bump();
      value_ += GainImpl(v);
      AddImpl(v);
    }

    virtual std::unique_ptr<Incremental> Clone() const = 0;

   protected:
    explicit Incremental(const ValueOracle* owner) : owner_(owner) {}
    virtual std::int64_t GainImpl(int v) const = 0;
    virtual void AddImpl(int v) = 0;

    // Uncounted evaluation, for implementations backed by whole-set f.
    std::int64_t EvalRaw(const Solution& x) const {
      return owner_->ValueImpl(x);
    }

    const ValueOracle* owner_;
    std::int64_t value_ = 0;
  };

  virtual ~ValueOracle() = default;

  std::int64_t Value(const Solution& x) const {
    calls_.Bump();
    return ValueImpl(x);
  }

  // f(x ∪ {v}) - f(x). Throws if v is already in x. One oracle call.
  std::int64_t MarginalGain(const Solution& x, int v) const;

  // Evaluation state for z = ∅.
  virtual std::unique_ptr<Incremental> MakeIncremental() const;

  int ground_size() const { return ground_size_; }
  std::int64_t call_count() const { return calls_.count(); }
  void ResetCallCount() const { calls_.Reset(); }

 protected:
  explicit ValueOracle(int ground_size) : ground_size_(ground_size) {}
  virtual std::int64_t ValueImpl(const Solution& x) const = 0;

 private:
  int ground_size_;
  CallCounter calls_;
};

// Number of vertices covered by x in an undirected graph: x itself plus all
// neighbors of x. Monotone submodular. Partial solutions carry a covered-set
// bitmask, so marginal gains cost O(|V|/64) words.
class VertexCoverageObjective : public ValueOracle {
 public:
  explicit VertexCoverageObjective(const Graph& graph);

  std::unique_ptr<Incremental> MakeIncremental() const override;

 protected:
  std::int64_t ValueImpl(const Solution& x) const override;

 private:
  class CoverageState;
  int words_;
  std::vector<std::uint64_t> closed_;  // closed neighborhood per vertex
};

// f(x) = sum of nonnegative integer weights of the members of x.
class ModularObjective : public ValueOracle {
 public:
  explicit ModularObjective(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return weights_; }

  std::unique_ptr<Incremental> MakeIncremental() const override;

 protected:
  std::int64_t ValueImpl(const Solution& x) const override;

 private:
  class ModularState;
  std::vector<std::int64_t> weights_;
};

// Outcome of an exhaustive monotonicity-and-submodularity check.
struct CertifyReport {
  enum class Violation { kNone, kMonotone, kSubmodular };

  bool ok = true;
  Violation violation = Violation::kNone;
  // For kMonotone: f(y) < f(x) with x ⊆ y.
  // For kSubmodular: marginal gain of v at y exceeds the gain at x ⊆ y.
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  int element = -1;

  std::string ToString() const;
};

// Exhaustively certifies that f is monotone and submodular over a ground set
// of at most max_n elements; returns the first violation found. Refuses
// larger ground sets.
CertifyReport CertifyMonotoneSubmodular(const ValueOracle& f, int max_n = 12);

}  // namespace divgreedy

#endif  // DIVGREEDY_OBJECTIVE_H_

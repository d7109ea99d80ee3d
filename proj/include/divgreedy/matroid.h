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

#ifndef DIVGREEDY_MATROID_H_
#define DIVGREEDY_MATROID_H_

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "divgreedy/solution.h"

namespace divgreedy {

// Copyable relaxed atomic tally, used for oracle call accounting. Counts are
// exact under concurrent use; ordering is irrelevant.
class CallCounter {
 public:
  CallCounter() = default;
  CallCounter(const CallCounter& other)
      : n_(other.n_.load(std::memory_order_relaxed)) {}
  CallCounter& operator=(const CallCounter& other) {
    n_.store(other.n_.load(std::memory_order_relaxed),
             std::memory_order_relaxed);
    return *this;
  }

  void Bump() const { n_.fetch_add(1, std::memory_order_relaxed); }
  std::int64_t count() const { return n_.load(std::memory_order_relaxed); }
  void Reset() const { n_.store(0, std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::int64_t> n_{0};
};

// Membership oracle for a downward-closed feasibility structure over
// {0, ..., ground_size-1}. Every query goes through IsIndependent() so that
// algorithms can be metered in the independence-oracle model.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  bool IsIndependent(const Solution& x) const {
    calls_.Bump();
    return IsIndependentImpl(x);
  }

  int ground_size() const { return ground_size_; }
  std::int64_t call_count() const { return calls_.count(); }
  void ResetCallCount() const { calls_.Reset(); }

 protected:
  explicit IndependenceOracle(int ground_size) : ground_size_(ground_size) {}
  virtual bool IsIndependentImpl(const Solution& x) const = 0;

 private:
  int ground_size_;
  CallCounter calls_;
};

// Marker base for oracles that are honest matroids (hereditary plus the
// exchange axiom). RankOf and ClosureOf are only correct for these.
class Matroid : public IndependenceOracle {
 protected:
  using IndependenceOracle::IndependenceOracle;
};

// Independent iff |x| <= K.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank_cap);
  int rank_cap() const { return rank_cap_; }

 protected:
  bool IsIndependentImpl(const Solution& x) const override;

 private:
  int rank_cap_;
};

// Independent iff |x ∩ B_i| <= cap_i for every block B_i of a partition of
// the ground set.
class PartitionMatroid : public Matroid {
 public:
  // block_of[v] is the block index of element v; caps[i] the budget of
  // block i. Every block index in [0, caps.size()) must be used by the map.
  PartitionMatroid(std::vector<int> block_of, std::vector<int> caps);

  int num_blocks() const { return static_cast<int>(caps_.size()); }
  int block_of(int v) const { return block_of_[v]; }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }

 protected:
  bool IsIndependentImpl(const Solution& x) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> caps_;
  std::vector<int> block_sizes_;
};

// An explicitly enumerated independence family over a small ground set
// (n <= 20). The family is taken as given; use CheckMatroidAxioms to vet it.
class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(int ground_size,
                  const std::vector<std::uint32_t>& independent_masks);

  bool independent(std::uint32_t mask) const { return member_[mask]; }

  // Materializes any oracle over n <= 20 elements by exhaustive enumeration.
  static ExplicitMatroid Materialize(const IndependenceOracle& oracle);

 protected:
  bool IsIndependentImpl(const Solution& x) const override;

 private:
  std::vector<bool> member_;
};

// Intersection of downward-closed constraints; not a matroid in general, so
// it deliberately does not derive from Matroid.
class IntersectionConstraint : public IndependenceOracle {
 public:
  explicit IntersectionConstraint(
      std::vector<std::shared_ptr<const IndependenceOracle>> members);

  const std::vector<std::shared_ptr<const IndependenceOracle>>& members()
      const {
    return members_;
  }

 protected:
  bool IsIndependentImpl(const Solution& x) const override;

 private:
  std::vector<std::shared_ptr<const IndependenceOracle>> members_;
};

// Size of a largest independent subset of x, computed by a greedy scan in
// increasing element order. Correct for matroids by the exchange axiom.
int RankOf(const Matroid& m, const Solution& x);

// Rank of the whole ground set.
int RankOf(const Matroid& m);

// All elements whose addition to independent x does not raise its rank,
// i.e. x itself plus every v with x ∪ {v} dependent. Costs at most |V|
// oracle calls. Throws if x is dependent.
Solution ClosureOf(const Matroid& m, const Solution& x);

// Elements u outside z with z ∪ {u} feasible.
std::vector<int> FeasibleExtensions(const IndependenceOracle& c,
                                    const Solution& z);

// True iff some singleton is dependent.
bool HasLoops(const IndependenceOracle& c);

// Outcome of an exhaustive matroid-axioms check.
struct AxiomsReport {
  enum class Violation { kNone, kEmptySet, kHereditary, kExchange };

  bool ok = true;
  Violation violation = Violation::kNone;
  // For kHereditary: y is independent but its subset x is not.
  // For kExchange: x, y independent with |x| < |y| and no e in y \ x
  // extends x.
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::string ToString() const;
};

// Verifies the three matroid axioms by enumeration; returns the first
// violation found. Refuses ground sets larger than 20 elements.
AxiomsReport CheckMatroidAxioms(const ExplicitMatroid& m);

// Reads a partition matroid from a block-per-line description:
//   cap: id id id ...
// with decimal 1-based element ids. Blank lines and lines starting with
// '#' are skipped. The blocks must partition {1, ..., ground_size}.
PartitionMatroid ParsePartitionFile(std::istream& in, int ground_size);
PartitionMatroid LoadPartitionFile(const std::string& path, int ground_size);

}  // namespace divgreedy

#endif  // DIVGREEDY_MATROID_H_

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

#ifndef DIVGREEDY_SOLUTION_H_
#define DIVGREEDY_SOLUTION_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace divgreedy {

// A subset of the ground set {0, ..., ground_size-1}, stored as a dense
// bitset with a cached cardinality.
class Solution {
 public:
  Solution() = default;
  explicit Solution(int ground_size);

  // Builds a solution from the low `ground_size` bits of `mask`.
  // Requires ground_size <= 64.
  static Solution FromMask(int ground_size, std::uint64_t mask);
  static Solution Of(int ground_size, std::initializer_list<int> elements);
  static Solution Full(int ground_size);

  int ground_size() const { return ground_size_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  // Insert/Erase are no-ops when the element is already present/absent.
  void Insert(int v);
  void Erase(int v);

  bool IsSubsetOf(const Solution& other) const;
  int HammingDistance(const Solution& other) const;

  // Members in increasing order.
  std::vector<int> Elements() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int v = static_cast<int>(w << 6) + std::countr_zero(bits);
        fn(v);
        bits &= bits - 1;
      }
    }
  }

  // The set as a bitmask. Requires ground_size <= 64.
  std::uint64_t mask() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  int ground_size_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// An ordered list of `multiset_size` solutions over a common ground set,
// together with the per-element representation counts. The index is the
// identity of a solution, so duplicates are distinguishable and can be
// grown independently.
class SolutionMultiset {
 public:
  SolutionMultiset(int ground_size, int multiset_size);

  // `multiset_size` copies of `x`.
  static SolutionMultiset Replicate(const Solution& x, int multiset_size);
  static SolutionMultiset Of(std::vector<Solution> solutions);

  int ground_size() const { return ground_size_; }
  int multiset_size() const { return static_cast<int>(solutions_.size()); }

  const Solution& solution(int i) const { return solutions_[i]; }
  const std::vector<Solution>& solutions() const { return solutions_; }

  // How many solutions contain `v`.
  int count(int v) const { return counts_[v]; }
  const std::vector<int>& counts() const { return counts_; }

  // Inserts `v` into solution `i`. Requires that it is not already there.
  void Insert(int i, int v);

 private:
  int ground_size_ = 0;
  std::vector<Solution> solutions_;
  std::vector<int> counts_;
};

}  // namespace divgreedy

#endif  // DIVGREEDY_SOLUTION_H_

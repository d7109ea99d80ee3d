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

#include "divgreedy/solution.h"

#include <cassert>
#include <stdexcept>

namespace divgreedy {

Solution::Solution(int ground_size)
    : ground_size_(ground_size),
      words_(static_cast<std::size_t>(ground_size + 63) / 64, 0) {
  assert(ground_size >= 0);
}

Solution Solution::FromMask(int ground_size, std::uint64_t mask) {
  if (ground_size > 64) {
    throw std::invalid_argument("FromMask requires ground_size <= 64");
  }
  Solution s(ground_size);
  if (ground_size > 0) {
    const std::uint64_t keep =
        ground_size == 64 ? ~0ull : ((1ull << ground_size) - 1);
    s.words_[0] = mask & keep;
    s.size_ = std::popcount(s.words_[0]);
  }
  return s;
}

Solution Solution::Of(int ground_size, std::initializer_list<int> elements) {
  Solution s(ground_size);
  for (int v : elements) s.Insert(v);
  return s;
}

Solution Solution::Full(int ground_size) {
  Solution s(ground_size);
  for (int v = 0; v < ground_size; ++v) s.Insert(v);
  return s;
}

void Solution::Insert(int v) {
  assert(v >= 0 && v < ground_size_);
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t bit = 1ull << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void Solution::Erase(int v) {
  assert(v >= 0 && v < ground_size_);
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t bit = 1ull << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

bool Solution::IsSubsetOf(const Solution& other) const {
  assert(ground_size_ == other.ground_size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

int Solution::HammingDistance(const Solution& other) const {
  assert(ground_size_ == other.ground_size_);
  int d = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    d += std::popcount(words_[i] ^ other.words_[i]);
  }
  return d;
}

std::vector<int> Solution::Elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  ForEach([&out](int v) { out.push_back(v); });
  return out;
}

std::uint64_t Solution::mask() const {
  if (ground_size_ > 64) {
    throw std::logic_error("mask() requires ground_size <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

SolutionMultiset::SolutionMultiset(int ground_size, int multiset_size)
    : ground_size_(ground_size),
      solutions_(static_cast<std::size_t>(multiset_size),
                 Solution(ground_size)),
      counts_(static_cast<std::size_t>(ground_size), 0) {
  assert(multiset_size >= 0);
}

SolutionMultiset SolutionMultiset::Replicate(const Solution& x,
                                             int multiset_size) {
  SolutionMultiset p(x.ground_size(), multiset_size);
  for (int i = 0; i < multiset_size; ++i) {
    x.ForEach([&p, i](int v) { p.Insert(i, v); });
  }
  return p;
}

SolutionMultiset SolutionMultiset::Of(std::vector<Solution> solutions) {
  if (solutions.empty()) return SolutionMultiset(0, 0);
  SolutionMultiset p(solutions[0].ground_size(),
                     static_cast<int>(solutions.size()));
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    solutions[i].ForEach(
        [&p, i](int v) { p.Insert(static_cast<int>(i), v); });
  }
  return p;
}

void SolutionMultiset::Insert(int i, int v) {
  assert(!solutions_[static_cast<std::size_t>(i)].contains(v));
  solutions_[static_cast<std::size_t>(i)].Insert(v);
  ++counts_[static_cast<std::size_t>(v)];
}

}  // namespace divgreedy

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

#ifndef DIVGREEDY_GRAPH_H_
#define DIVGREEDY_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace divgreedy {

// Undirected simple graph over vertices {0, ..., n-1}, adjacency stored as
// one bitset row per vertex. No self-loops.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  int words_per_row() const { return words_; }

  bool HasEdge(int u, int v) const;
  // Adds {u, v}; returns false (and changes nothing) when the edge already
  // exists or u == v.
  bool AddEdge(int u, int v);

  int Degree(int v) const;
  std::span<const std::uint64_t> Row(int v) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> adj_;
};

enum class GraphFormat { kAuto, kEdgeList, kMatrixMarket };

// Reads an undirected graph.
//  - Edge list: one `u v` pair per line, 1-based decimal ids, `%` and `#`
//    comment lines allowed. The vertex count is the largest id seen.
//  - MatrixMarket: coordinate format, pattern/integer/real fields accepted
//    (values ignored), general or symmetric.
// Self-loops are dropped and duplicate edges are deduplicated; both are
// reported with a single warning on stderr. With `complement` set, the edge
// set is complemented (still without self-loops). kAuto picks MatrixMarket
// for a `.mtx` extension and edge list otherwise.
Graph LoadGraph(const std::string& path, GraphFormat format = GraphFormat::kAuto,
                bool complement = false);

// Stream variants used by LoadGraph; `name` only labels error messages.
Graph ParseEdgeList(std::istream& in, const std::string& name);
Graph ParseMatrixMarket(std::istream& in, const std::string& name);

// Complement of the edge set, without self-loops.
Graph Complement(const Graph& g);

// Deterministic Erdős–Rényi-style G(n, m) graph: exactly m distinct edges
// drawn from a seeded generator. Identical (n, m, seed) gives an identical
// graph on every run and platform.
Graph RandomGraph(int n, std::int64_t m, std::uint64_t seed);

}  // namespace divgreedy

#endif  // DIVGREEDY_GRAPH_H_

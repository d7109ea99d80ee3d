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

#include "divgreedy/graph.h"

#include <bit>
#include <algorithm>
#include <cassert>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace divgreedy {
namespace {

struct RawEdges {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

bool IsCommentOrBlank(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '%' ||
         line[first] == '#';
}

Graph BuildGraph(const RawEdges& raw, const std::string& name) {
  Graph g(raw.n);
  std::int64_t duplicates = 0;
  std::int64_t self_loops = 0;
  for (const auto& [u, v] : raw.edges) {
    if (u == v) {
      ++self_loops;
      continue;
    }
    if (!g.AddEdge(u, v)) ++duplicates;
  }
  if (duplicates > 0 || self_loops > 0) {
    std::cerr << "warning: " << name << ": dropped " << duplicates
              << " duplicate edge(s) and " << self_loops << " self-loop(s)\n";
  }
  return g;
}

}  // namespace

Graph::Graph(int n)
    : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {
  assert(n >= 0);
}

bool Graph::HasEdge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

bool Graph::AddEdge(int u, int v) {
  if (u == v || HasEdge(u, v)) return false;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++edge_count_;
  return true;
}

int Graph::Degree(int v) const {
  int d = 0;
  for (std::uint64_t w : Row(v)) d += std::popcount(w);
  return d;
}

std::span<const std::uint64_t> Graph::Row(int v) const {
  return {adj_.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

Graph ParseEdgeList(std::istream& in, const std::string& name) {
  RawEdges raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || u < 1 || v < 1) {
      throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                  ": expected two positive vertex ids");
    }
    raw.n = std::max(raw.n, static_cast<int>(std::max(u, v)));
    raw.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return BuildGraph(raw, name);
}

Graph ParseMatrixMarket(std::istream& in, const std::string& name) {
  std::string line;
  int line_no = 0;
  // Header: %%MatrixMarket matrix coordinate <field> <symmetry>
  if (!std::getline(in, line)) {
    throw std::invalid_argument(name + ": empty file");
  }
  ++line_no;
  {
    std::istringstream header(line);
    std::string banner, object, fmt, field, symmetry;
    header >> banner >> object >> fmt >> field >> symmetry;
    if (banner.rfind("%%MatrixMarket", 0) != 0 || object != "matrix" ||
        fmt != "coordinate") {
      throw std::invalid_argument(name + ":1: not a coordinate MatrixMarket file");
    }
  }
  // Size line after comments.
  long long rows = 0, cols = 0, nnz = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz) || rows < 0 || cols < 0) {
      throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                  ": bad size line");
    }
    break;
  }
  RawEdges raw;
  raw.n = static_cast<int>(std::max(rows, cols));
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u >> v) || u < 1 || v < 1 || u > raw.n || v > raw.n) {
      throw std::invalid_argument(name + ":" + std::to_string(line_no) +
                                  ": bad entry line");
    }
    raw.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (static_cast<long long>(raw.edges.size()) != nnz) {
    std::cerr << "warning: " << name << ": header announces " << nnz
              << " entries, found " << raw.edges.size() << "\n";
  }
  return BuildGraph(raw, name);
}

Graph LoadGraph(const std::string& path, GraphFormat format, bool complement) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  if (format == GraphFormat::kAuto) {
    format = path.size() >= 4 && path.substr(path.size() - 4) == ".mtx"
                 ? GraphFormat::kMatrixMarket
                 : GraphFormat::kEdgeList;
  }
  Graph g = format == GraphFormat::kMatrixMarket ? ParseMatrixMarket(in, path)
                                                 : ParseEdgeList(in, path);
  return complement ? Complement(g) : g;
}

Graph Complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.HasEdge(u, v)) out.AddEdge(u, v);
    }
  }
  return out;
}

Graph RandomGraph(int n, std::int64_t m, std::uint64_t seed) {
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges) {
    throw std::invalid_argument("RandomGraph: edge count out of range");
  }
  Graph g(n);
  // splitmix64; fixed algorithm keeps the graph reproducible everywhere.
  std::uint64_t state = seed;
  const auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  while (g.edge_count() < m) {
    const int u = static_cast<int>(next() % static_cast<std::uint64_t>(n));
    const int v = static_cast<int>(next() % static_cast<std::uint64_t>(n));
    if (u != v) g.AddEdge(u, v);
  }
  return g;
}

}  // namespace divgreedy

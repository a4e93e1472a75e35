// Copyright 2026 The hadsw Authors
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

#include "hadsw/loop_graph.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace hadsw {

LoopGraph::LoopGraph(int vertexCount)
    : n_(vertexCount), stride_((vertexCount + 63) / 64) {
  if (vertexCount < 0) {
    throw std::invalid_argument("LoopGraph: negative vertex count");
  }
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void LoopGraph::check_v(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("LoopGraph: vertex " + std::to_string(v) +
                            " out of range");
  }
}

void LoopGraph::set_edge(int a, int b, bool present) {
  check_v(a);
  check_v(b);
  const std::uint64_t maskB = std::uint64_t{1} << (b % 64);
  const std::uint64_t maskA = std::uint64_t{1} << (a % 64);
  if (present) {
    word(a, b) |= maskB;
    word(b, a) |= maskA;
  } else {
    word(a, b) &= ~maskB;
    word(b, a) &= ~maskA;
  }
}

int LoopGraph::degree(int v) const {
  check_v(v);
  const auto w = row_words(v);
  int d = 0;
  for (std::uint64_t x : w) d += std::popcount(x);
  return d - (has_loop(v) ? 1 : 0);
}

std::vector<int> LoopGraph::neighbors(int v) const {
  check_v(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (u != v && has_edge(v, u)) out.push_back(u);
  }
  return out;
}

int LoopGraph::loop_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += has_loop(v);
  return c;
}

int LoopGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

LoopGraph relabel(const LoopGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation has wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("relabel: not a permutation");
    }
    seen[v] = 1;
  }
  LoopGraph out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (g.has_edge(perm[i], perm[j])) out.set_edge(i, j, true);
    }
  }
  return out;
}

}  // namespace hadsw

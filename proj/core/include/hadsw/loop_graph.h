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

#ifndef HADSW_LOOP_GRAPH_H_
#define HADSW_LOOP_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace hadsw {

// Undirected graph allowing loops, as a bit-packed symmetric adjacency
// matrix. A loop is the diagonal bit; degree() and neighbors() exclude the
// vertex itself, loop or not.
class LoopGraph {
 public:
  LoopGraph() = default;
  explicit LoopGraph(int vertexCount);

  int vertex_count() const { return n_; }

  bool has_edge(int a, int b) const {
    return (word(a, b) >> (b % 64)) & 1u;
  }
  void set_edge(int a, int b, bool present);
  bool has_loop(int v) const { return has_edge(v, v); }
  void set_loop(int v, bool present) { set_edge(v, v, present); }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  int loop_count() const;
  int edge_count() const;  // loops excluded

  bool operator==(const LoopGraph& other) const = default;

  // Packed adjacency row (diagonal bit included).
  std::span<const std::uint64_t> row_words(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_,
            static_cast<std::size_t>(stride_)};
  }
  int words_per_row() const { return stride_; }

 private:
  std::uint64_t& word(int a, int b) {
    return bits_[static_cast<std::size_t>(a) * stride_ + b / 64];
  }
  const std::uint64_t& word(int a, int b) const {
    return bits_[static_cast<std::size_t>(a) * stride_ + b / 64];
  }
  void check_v(int v) const;

  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Applies perm (newIdx -> oldIdx) to the graph: result has an edge (i, j)
// exactly when g has (perm[i], perm[j]).
LoopGraph relabel(const LoopGraph& g, const std::vector<int>& perm);

}  // namespace hadsw

#endif  // HADSW_LOOP_GRAPH_H_

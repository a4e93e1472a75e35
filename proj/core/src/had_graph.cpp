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

#include "hadsw/had_graph.h"

namespace hadsw {

LoopGraph hadamard_graph(const SignMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  LoopGraph g(2 * rows + 2 * cols);
  const auto v = [](int i) { return i; };
  const auto vp = [rows](int i) { return rows + i; };
  const auto w = [rows](int j) { return 2 * rows + j; };
  const auto wp = [rows, cols](int j) { return 2 * rows + cols + j; };
  for (int i = 0; i < rows; ++i) {
    g.set_loop(v(i), true);
    g.set_loop(vp(i), true);
    for (int j = 0; j < cols; ++j) {
      if (m.get(i, j) == 1) {
        g.set_edge(v(i), w(j), true);
        g.set_edge(vp(i), wp(j), true);
      } else {
        g.set_edge(v(i), wp(j), true);
        g.set_edge(vp(i), w(j), true);
      }
    }
  }
  return g;
}

}  // namespace hadsw

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

#ifndef HADSW_HAD_GRAPH_H_
#define HADSW_HAD_GRAPH_H_

#include "hadsw/loop_graph.h"
#include "hadsw/sign_matrix.h"

namespace hadsw {

// McKay's graph of an m x n sign matrix: 2m + 2n vertices, indexed
//   0..m-1        v_i   (row i, plain)
//   m..2m-1       v'_i  (row i, negated copy)
//   2m..2m+n-1    w_j   (column j, plain)
//   2m+n..2m+2n-1 w'_j  (column j, negated copy)
// with edges (v_i, w_j), (v'_i, w'_j) when m[i][j] = +1 and
// (v_i, w'_j), (v'_i, w_j) when m[i][j] = -1, plus loops on every v_i, v'_i.
// Two square Hadamard matrices are equivalent exactly when their graphs are
// isomorphic, which is what equivalent() decides.
LoopGraph hadamard_graph(const SignMatrix& m);

}  // namespace hadsw

#endif  // HADSW_HAD_GRAPH_H_

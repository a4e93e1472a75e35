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

#ifndef HADSW_GRAPH_IO_H_
#define HADSW_GRAPH_IO_H_

#include <string>

#include "hadsw/loop_graph.h"
#include "hadsw/matrix_io.h"

namespace hadsw {

// Line-oriented, diff-friendly form: a header "vertices N", then one line
// per vertex "idx loop_flag: n1 n2 ..." with neighbours ascending.
std::string emit_graph(const LoopGraph& g);

// Inverse of emit_graph. Edges may be listed from either endpoint; the
// result is symmetric either way. Throws ParseError on malformed input.
LoopGraph parse_graph(const std::string& text);

}  // namespace hadsw

#endif  // HADSW_GRAPH_IO_H_

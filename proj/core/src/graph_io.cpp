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

#include "hadsw/graph_io.h"

#include <sstream>

namespace hadsw {

std::string emit_graph(const LoopGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v << " " << (g.has_loop(v) ? 1 : 0) << ":";
    for (int u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
  return out.str();
}

LoopGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;

  int n = -1;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank
    if (word != "vertices" || !(ls >> n) || n < 0) {
      throw ParseError(lineNo, 1, "expected header 'vertices N'");
    }
    break;
  }
  if (n < 0) {
    throw ParseError(lineNo + 1, 1, "expected header 'vertices N'");
  }

  LoopGraph g(n);
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    int idx = 0;
    if (!(ls >> idx)) continue;  // blank
    std::string flagWithColon;
    if (!(ls >> flagWithColon) || idx < 0 || idx >= n) {
      throw ParseError(lineNo, 1, "expected 'idx loop_flag: neighbours'");
    }
    std::string flag = flagWithColon;
    bool sawColon = false;
    if (!flag.empty() && flag.back() == ':') {
      flag.pop_back();
      sawColon = true;
    }
    if (flag != "0" && flag != "1") {
      throw ParseError(lineNo, 1, "loop flag must be 0 or 1");
    }
    if (!sawColon) {
      std::string colon;
      if (!(ls >> colon) || colon != ":") {
        throw ParseError(lineNo, 1, "expected ':' after loop flag");
      }
    }
    g.set_loop(idx, flag == "1");
    int u = 0;
    while (ls >> u) {
      if (u < 0 || u >= n || u == idx) {
        throw ParseError(lineNo, 1,
                         "neighbour index " + std::to_string(u) +
                             " out of range");
      }
      g.set_edge(idx, u, true);
    }
    if (!ls.eof()) {
      throw ParseError(lineNo, 1, "malformed neighbour list");
    }
  }
  return g;
}

}  // namespace hadsw

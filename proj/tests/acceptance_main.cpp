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

// Reproduction gate: one line per criterion, exit 0 only when the gate is
// green. Optional flags: --budget N for the order-36 runs, --extended with
// --sloane-dir DIR for the order-24 checks.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "acceptance/acceptance.h"

int main(int argc, char** argv) {
  hadsw::acceptance::Options opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      opts.extended = true;
    } else if (arg == "--sloane-dir" && i + 1 < argc) {
      opts.sloaneDir = argv[++i];
    } else if (arg == "--budget" && i + 1 < argc) {
      opts.largeBudget = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr,
                   "usage: %s [--budget N] [--extended --sloane-dir DIR]\n",
                   argv[0]);
      return 2;
    }
  }

  const auto results = hadsw::acceptance::run_acceptance(opts);
  for (const auto& r : results) {
    std::printf("%2d  %-52s %-12s %9.2f s  %s\n", r.id, r.name.c_str(),
                r.status.c_str(), r.millis / 1000.0, r.detail.c_str());
  }
  const bool ok = hadsw::acceptance::acceptable(results);
  std::printf("overall: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

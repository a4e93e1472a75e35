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

#include "hadsw/sloane.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hadsw/matrix_io.h"

namespace hadsw {

SloaneIngest ingest_sloane(const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw std::runtime_error("ingest_sloane: not a directory: " + directory);
  }

  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  SloaneIngest out;
  for (const fs::path& path : files) {
    const std::string name = path.filename().string();
    std::ifstream in(path);
    if (!in) {
      out.errors.push_back(name + ": cannot open");
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<SignMatrix> parsed;
    try {
      parsed = parse_matrices(buf.str(), MatrixFormat::kPlusMinus);
    } catch (const ParseError& e) {
      out.errors.push_back(name + ": " + e.what());
      continue;
    }
    if (parsed.empty()) {
      out.errors.push_back(name + ": no matrix in file");
      continue;
    }
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      const std::string key =
          parsed.size() == 1 ? name : name + "#" + std::to_string(i);
      if (!is_hadamard(parsed[i])) {
        out.errors.push_back(key + ": not a Hadamard matrix");
        continue;
      }
      out.matrices.emplace_back(key, std::move(parsed[i]));
    }
  }
  return out;
}

}  // namespace hadsw

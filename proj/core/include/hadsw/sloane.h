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

#ifndef HADSW_SLOANE_H_
#define HADSW_SLOANE_H_

#include <string>
#include <utility>
#include <vector>

#include "hadsw/sign_matrix.h"

namespace hadsw {

// Matrices read from a directory of plusminus files, registered by filename
// (with a #k suffix when one file holds several). Files that fail to parse
// or are not Hadamard land in errors instead; nothing is fatal per file.
struct SloaneIngest {
  std::vector<std::pair<std::string, SignMatrix>> matrices;
  std::vector<std::string> errors;
};

// Reads every regular file in the directory, in filename order. Throws
// std::runtime_error only when the directory itself cannot be read.
SloaneIngest ingest_sloane(const std::string& directory);

}  // namespace hadsw

#endif  // HADSW_SLOANE_H_

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

#ifndef HADSW_CORPUS_H_
#define HADSW_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "hadsw/sign_matrix.h"

namespace hadsw {

// Built-in Hadamard matrices: one representative per equivalence class of
// orders 1 to 20 that this library's tests exercise, the order-36 pair
// related by switching, and normalized versions of that pair.
struct CorpusEntry {
  std::string name;
  SignMatrix matrix;
};

const std::vector<CorpusEntry>& corpus();

// Lookup by name. Accepts spelling variants: case is ignored, a prime may be
// written as ' or as the Unicode prime sign and may sit before or after the
// order ("H'36" and "H36'" are the same entry), and "-switched" is an alias
// for the prime. Throws std::invalid_argument for unknown names.
const SignMatrix& corpus_matrix(std::string_view name);
bool corpus_has(std::string_view name);
std::vector<std::string> corpus_names();

}  // namespace hadsw

#endif  // HADSW_CORPUS_H_

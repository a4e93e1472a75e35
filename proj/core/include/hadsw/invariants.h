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

#ifndef HADSW_INVARIANTS_H_
#define HADSW_INVARIANTS_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "hadsw/sign_matrix.h"

namespace hadsw {

// Diagonal d_1 | d_2 | ... of the Smith normal form, all entries positive
// (square nonsingular input; a Hadamard matrix always is).
using SnfDiagonal = std::vector<mpz_class>;

SnfDiagonal snf_diagonal(const SignMatrix& m);

// Distribution of |sum over columns of the entrywise product of four rows|,
// over all 4-element row subsets: value -> number of subsets.
using Profile4 = std::map<long, std::uint64_t>;

// Throws std::invalid_argument when m has fewer than 4 rows.
Profile4 profile4(const SignMatrix& m);

}  // namespace hadsw

#endif  // HADSW_INVARIANTS_H_

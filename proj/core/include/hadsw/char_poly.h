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

#ifndef HADSW_CHAR_POLY_H_
#define HADSW_CHAR_POLY_H_

#include <gmpxx.h>

#include <vector>

#include "hadsw/loop_graph.h"

namespace hadsw {

// Exact characteristic polynomial det(xI - A) of the adjacency matrix (loops
// contribute 1 on the diagonal). Coefficients in descending power order:
// result[0] = 1 is the coefficient of x^V, result[1] equals minus the number
// of loops. Computed by Chinese remaindering of Hessenberg reductions modulo
// 61-bit primes, enough of them to cover the Hadamard-inequality coefficient
// bound C(V,k) * k^(k/2).
std::vector<mpz_class> char_poly(const LoopGraph& g);

bool cospectral(const LoopGraph& a, const LoopGraph& b);

}  // namespace hadsw

#endif  // HADSW_CHAR_POLY_H_

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

#include "hadsw/equivalence.h"

#include <stdexcept>

#include "hadsw/char_poly.h"
#include "hadsw/had_graph.h"
#include "hadsw/invariants.h"

namespace hadsw {

EquivalenceReport equivalent(const SignMatrix& a, const SignMatrix& b,
                             std::uint64_t budget) {
  if (!is_hadamard(a) || !is_hadamard(b)) {
    throw std::invalid_argument("equivalent: matrix is not Hadamard");
  }
  if (a.rows() != b.rows()) {
    return {EquivalenceResult::kInequivalent, "order"};
  }

  const LoopGraph ga = hadamard_graph(a);
  const LoopGraph gb = hadamard_graph(b);
  if (char_poly(ga) != char_poly(gb)) {
    return {EquivalenceResult::kInequivalent, "char_poly"};
  }
  if (snf_diagonal(a) != snf_diagonal(b)) {
    return {EquivalenceResult::kInequivalent, "snf"};
  }
  if (a.rows() >= 4 && profile4(a) != profile4(b)) {
    return {EquivalenceResult::kInequivalent, "profile4"};
  }

  try {
    const bool same = canonical_form(ga, budget).canonicalGraph ==
                      canonical_form(gb, budget).canonicalGraph;
    return {same ? EquivalenceResult::kEquivalent
                 : EquivalenceResult::kInequivalent,
            "canonical_form"};
  } catch (const BudgetExhausted&) {
    return {EquivalenceResult::kInconclusive, "canonical_form"};
  }
}

}  // namespace hadsw

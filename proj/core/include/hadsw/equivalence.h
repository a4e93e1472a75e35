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

#ifndef HADSW_EQUIVALENCE_H_
#define HADSW_EQUIVALENCE_H_

#include <cstdint>
#include <string>

#include "hadsw/canonical.h"
#include "hadsw/sign_matrix.h"

namespace hadsw {

enum class EquivalenceResult { kInequivalent, kEquivalent, kInconclusive };

// decidedBy names the cheapest level that settled the question: "order",
// "char_poly", "snf", "profile4", or "canonical_form". The screens can only
// prove inequivalence; equivalence always comes from canonical forms.
struct EquivalenceReport {
  EquivalenceResult result = EquivalenceResult::kInconclusive;
  std::string decidedBy;
};

// Decides whether two Hadamard matrices are equivalent (related by row and
// column permutations and negations) by testing isomorphism of their graphs,
// after screening with cheap exact invariants in cost order: order, graph
// characteristic polynomial, Smith normal form, 4-profile. An order mismatch
// is inequivalence, not an error. When the canonical-form search exceeds
// budget the result is kInconclusive. Throws std::invalid_argument when
// either matrix is not Hadamard.
EquivalenceReport equivalent(const SignMatrix& a, const SignMatrix& b,
                             std::uint64_t budget = kDefaultCanonicalBudget);

}  // namespace hadsw

#endif  // HADSW_EQUIVALENCE_H_

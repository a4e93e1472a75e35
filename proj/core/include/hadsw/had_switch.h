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

#ifndef HADSW_HAD_SWITCH_H_
#define HADSW_HAD_SWITCH_H_

#include <array>
#include <vector>

#include "hadsw/sign_matrix.h"

namespace hadsw {

// Four rows whose entrywise product is +all-ones or -all-ones, together with
// the canonicalization that makes the largest-index row all-ones: multiplying
// column c by colFlips[c] (and, when productSign is -1, negating that row)
// leaves the other three rows 3-normalized. fields is the column partition of
// that 3-normalized triple in canonicalized coordinates.
struct ClosedQuadruple {
  std::array<int, 4> rowIdxs;  // ascending
  int productSign = 1;         // row product equals productSign * all-ones
  std::vector<int> colFlips;   // +1 / -1 per column
  FieldStructure fields;
};

// Four rows whose entrywise product has exactly four entries of the minority
// sign, one in each field. minoritySign fixes the row negations: flipping the
// largest row when the minority is +1 makes the product minority -1, matching
// the canonical shape where the odd entries sit on the Hall columns.
struct HallSet {
  std::array<int, 4> rowIdxs;   // ascending
  std::array<int, 4> hallCols;  // ascending
  int minoritySign = -1;
  // fields[b] holds the columns of field b+1; the Hall column in field b+1 is
  // the one whose odd entry sits at quadruple position b+1.
  FieldStructure fields;
};

struct HallStandardForm {
  SignMatrix matrix;
  EquivalenceWitness witness;  // matrix == apply_equivalence(original, witness)
};

// All 4-row subsets with product +-all-ones, canonicalized.
// Throws std::invalid_argument if m is not Hadamard.
std::vector<ClosedQuadruple> find_closed_quadruples(const SignMatrix& m);

// Checks that q is exactly the canonical record find_closed_quadruples
// would produce for its rows on m. Throws std::invalid_argument otherwise.
void check_closed_quadruple(const SignMatrix& m, const ClosedQuadruple& q);

// Negates the quadruple rows on field fieldIdx (1..4, in canonicalized
// coordinates, which the function translates back to the original ones).
// The result is Hadamard. Throws on an invalid quadruple or field index.
SignMatrix switch_closed_quadruple(const SignMatrix& m,
                                   const ClosedQuadruple& q, int fieldIdx);

// All 4-row subsets forming a Hall set. Orders below 8 have none (the order-4
// degenerate case is a closed quadruple, not a Hall set). Column Hall sets
// are found by passing the transpose. Throws if m is not Hadamard.
std::vector<HallSet> find_hall_sets(const SignMatrix& m);

enum class HallColumnsTag { kClosedQuadruple, kHallSet };

// Structural check of the four Hall columns on the transpose: a closed
// quadruple when the order is 0 mod 8, a Hall set when it is 4 mod 8.
// Throws std::invalid_argument when the columns are neither (invalid input).
HallColumnsTag classify_hall_columns(const SignMatrix& m, const HallSet& h);

// Equivalence moving Hall rows/columns to positions 1..4 and sorting the
// remaining rows/columns by field, with signs fixed so the result has the
// canonical bordered shape: top-left 4x4 with +1 diagonal and -1 elsewhere,
// column borders f_1..f_4, row borders g_1..g_4, and every interior block
// with row and column sums 2 (diagonal block) or 0 (off-diagonal block).
// Requires order 4 mod 8. Throws std::runtime_error("block invariants
// unsatisfiable") when no such witness exists.
HallStandardForm hall_standard_form(const SignMatrix& m, const HallSet& h);

// Negates column border block fieldIdx and the corresponding row border block
// (1..4) of the standard form, expressed back in original coordinates. The
// result is Hadamard. Errors as hall_standard_form.
SignMatrix switch_hall_set(const SignMatrix& m, const HallSet& h, int fieldIdx);

}  // namespace hadsw

#endif  // HADSW_HAD_SWITCH_H_

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

#ifndef HADSW_GM_SWITCH_H_
#define HADSW_GM_SWITCH_H_

#include <string>
#include <utility>
#include <vector>

#include "hadsw/had_switch.h"
#include "hadsw/loop_graph.h"
#include "hadsw/sign_matrix.h"

namespace hadsw {

// Ordered cells C_1..C_t plus the remainder set D. Validity for switching is
// a checkable predicate (validate_partition), never assumed.
struct SwitchingPartition {
  std::vector<std::vector<int>> cells;
  std::vector<int> rest;
};

// Empty result means valid; otherwise one message per violation: a cell pair
// that is not cell-regular, a cell with mixed loop status, or a rest vertex
// whose neighbour count in a cell is not 0, half, or all. Loops never count
// as a vertex's own neighbour. Throws std::invalid_argument when p does not
// partition g's vertex set.
std::vector<std::string> validate_partition(const LoopGraph& g,
                                            const SwitchingPartition& p);

// For each rest vertex with exactly half of a cell as neighbours, complements
// its adjacency to that cell; everything else (loops included) is unchanged.
// The result is cospectral with g and switching again restores g. Throws
// std::invalid_argument when the partition is invalid.
LoopGraph gm_switch(const LoopGraph& g, const SwitchingPartition& p);

// The 9-set switching partition of hadamard_graph(m) whose GM-switch matches
// switch_closed_quadruple(m, q, fieldIdx): D holds the quadruple's v/v'
// vertices, C_1 both column vertices of the chosen field, C_2 the remaining
// v/v' vertices, and C_3..C_8 split each remaining field's column vertices
// into the two halves that agree with the canonicalizing flips. Vertices are
// indexed v_i = i, v'_i = n+i, w_j = 2n+j, w'_j = 3n+j. Requires order at
// least 8; throws on an invalid quadruple or field index.
SwitchingPartition quadruple_partition(const SignMatrix& m,
                                       const ClosedQuadruple& q, int fieldIdx);

// The 15-set switching partition of hadamard_graph(m) whose GM-switch matches
// switch_hall_set(m, h, fieldIdx): D holds all Hall row and Hall column
// vertices, C_1/C_2 the row/column vertices of the switched field, and
// C_3..C_14 the remaining fields' vertices split by block and sign of the
// standard form. Errors as hall_standard_form; fieldIdx must be 1..4.
SwitchingPartition hall_partition(const SignMatrix& m, const HallSet& h,
                                  int fieldIdx = 1);

// One line per checked condition. The checks are sufficient conditions only:
// all_passed() certifies the partition acts like the corresponding matrix
// switching, while a failure makes no converse claim.
struct ConditionReport {
  std::vector<std::pair<std::string, bool>> conditions;
  bool all_passed() const {
    for (const auto& [name, ok] : conditions) {
      if (!ok) return false;
    }
    return true;
  }
};

// Checks the structural conditions under which a switching partition of a
// Hadamard graph acts like switching a closed quadruple: at least 9 sets,
// the size pattern 8 / n/2 / n/4, loop placement, no-common-neighbour
// pairings in D and C_1, the half-of-C_1 common attachment to four rest
// vertices, and one dominating four-set of D per remaining field pair. The
// four-set is matched per pair because the canonicalizing flips give each
// field its own split of D. Throws std::invalid_argument when g's vertex
// count is not divisible by 4 or p is not a partition.
ConditionReport recognize_quadruple_partition(const LoopGraph& g,
                                              const SwitchingPartition& p);

// The Hall-set analogue: exactly 15 sets, sizes 16 / (n/2-2) / (n/4-1),
// eight looped plus eight loopless rest vertices with same-status pairings,
// the C_1/C_2 attachment conditions, loop placement across C_3..C_14, and
// per-pair dominating four-sets drawn from the loopless rest half for row
// cells and the looped half for column cells. Errors as above.
ConditionReport recognize_hall_partition(const LoopGraph& g,
                                         const SwitchingPartition& p);

}  // namespace hadsw

#endif  // HADSW_GM_SWITCH_H_

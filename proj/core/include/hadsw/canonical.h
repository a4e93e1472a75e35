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

#ifndef HADSW_CANONICAL_H_
#define HADSW_CANONICAL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadsw/loop_graph.h"

namespace hadsw {

// Thrown when a canonical-labeling search hits its step budget. The caller
// must treat the comparison as undecided, never as a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultCanonicalBudget = 10'000'000;

struct CanonicalForm {
  // relabel(input, labeling) == canonicalGraph; labeling maps new -> old.
  // When the input already equals its canonical graph, labeling is the
  // identity.
  LoopGraph canonicalGraph;
  std::vector<int> labeling;
  // Automorphism generators discovered during the search, as old-label maps.
  std::vector<std::vector<int>> automorphisms;
  std::uint64_t budgetUsed = 0;
};

// Deterministic canonical labeling: equitable refinement (loops as the
// initial 2-coloring) plus individualization on the first smallest
// non-singleton cell, taking the leaf whose (refinement trace, adjacency
// encoding) pair is minimal, with trace comparisons and discovered
// automorphisms pruning branches.
CanonicalForm canonical_form(const LoopGraph& g,
                             std::uint64_t budget = kDefaultCanonicalBudget);

// Canonical-form equality, short-circuited by vertex count, loop count,
// degree sequence and the characteristic polynomial.
bool isomorphic(const LoopGraph& a, const LoopGraph& b,
                std::uint64_t budget = kDefaultCanonicalBudget);

}  // namespace hadsw

#endif  // HADSW_CANONICAL_H_

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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

#include "hadsw/canonical.h"
#include "hadsw/corpus.h"
#include "hadsw/equivalence.h"
#include "hadsw/had_graph.h"
#include "hadsw/invariants.h"
#include "hadsw/loop_graph.h"
#include "hadsw/sign_matrix.h"

using hadsw::canonical_form;
using hadsw::CanonicalForm;
using hadsw::corpus_matrix;
using hadsw::EquivalenceResult;
using hadsw::hadamard_graph;
using hadsw::LoopGraph;
using hadsw::relabel;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  const LoopGraph g = hadamard_graph(corpus_matrix("H8"));
  const CanonicalForm base = canonical_form(g);
  CHECK(relabel(g, base.labeling) == base.canonicalGraph);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const LoopGraph shuffled = relabel(g, random_perm(g.vertex_count(), rng));
    const CanonicalForm cf = canonical_form(shuffled);
    CHECK(cf.canonicalGraph == base.canonicalGraph);
    CHECK(relabel(shuffled, cf.labeling) == cf.canonicalGraph);
  }
}

TEST_CASE("canonical form is idempotent with identity labeling") {
  const LoopGraph g = hadamard_graph(corpus_matrix("H12"));
  const CanonicalForm cf = canonical_form(g);
  const CanonicalForm again = canonical_form(cf.canonicalGraph);
  CHECK(again.canonicalGraph == cf.canonicalGraph);
  for (int i = 0; i < g.vertex_count(); ++i) CHECK(again.labeling[i] == i);
}

TEST_CASE("reported automorphisms fix the graph") {
  const LoopGraph g = hadamard_graph(corpus_matrix("H12"));
  const CanonicalForm cf = canonical_form(g);
  CHECK(!cf.automorphisms.empty());
  for (const std::vector<int>& a : cf.automorphisms) {
    CHECK(relabel(g, a) == g);
    CHECK(std::count(a.begin(), a.end(), 0) == 1);  // really a permutation
  }
}

TEST_CASE("an exhausted budget throws instead of answering") {
  const LoopGraph g = hadamard_graph(corpus_matrix("H12"));
  CHECK_THROWS_AS(canonical_form(g, 100), hadsw::BudgetExhausted);
  const hadsw::EquivalenceReport r =
      hadsw::equivalent(corpus_matrix("H12"), corpus_matrix("H12'"), 100);
  CHECK(r.result == EquivalenceResult::kInconclusive);
}

TEST_CASE("isomorphic separates relabelings from perturbations") {
  const LoopGraph g = hadamard_graph(corpus_matrix("H8"));
  std::mt19937 rng(11);
  const LoopGraph shuffled = relabel(g, random_perm(g.vertex_count(), rng));
  CHECK(hadsw::isomorphic(g, shuffled));

  LoopGraph damaged = shuffled;
  damaged.set_edge(0, 1, !damaged.has_edge(0, 1));
  CHECK(!hadsw::isomorphic(g, damaged));
  CHECK(!hadsw::isomorphic(g, LoopGraph(g.vertex_count())));
}

TEST_CASE("equivalence verdicts come from the cheapest deciding level") {
  SUBCASE("order mismatch") {
    const auto r = hadsw::equivalent(corpus_matrix("H4"), corpus_matrix("H8"));
    CHECK(r.result == EquivalenceResult::kInequivalent);
    CHECK(r.decidedBy == "order");
  }
  SUBCASE("switched order-12 pair is equivalent") {
    const auto r =
        hadsw::equivalent(corpus_matrix("H12"), corpus_matrix("H12'"));
    CHECK(r.result == EquivalenceResult::kEquivalent);
    CHECK(r.decidedBy == "canonical_form");
  }
  SUBCASE("order-16 classes 3 and 4 need canonical forms") {
    const auto r =
        hadsw::equivalent(corpus_matrix("H16.3"), corpus_matrix("H16.4"));
    CHECK(r.result == EquivalenceResult::kInequivalent);
    CHECK(r.decidedBy == "canonical_form");
  }
  SUBCASE("order-16 classes 0 and 1 are separated by a screen") {
    const auto r =
        hadsw::equivalent(corpus_matrix("H16.0"), corpus_matrix("H16.1"));
    CHECK(r.result == EquivalenceResult::kInequivalent);
    CHECK(r.decidedBy == "snf");
  }
  SUBCASE("a matrix is equivalent to itself") {
    const auto r = hadsw::equivalent(corpus_matrix("H1"), corpus_matrix("H1"));
    CHECK(r.result == EquivalenceResult::kEquivalent);
  }
}

TEST_CASE("equivalence requires Hadamard inputs") {
  CHECK_THROWS_AS(
      hadsw::equivalent(hadsw::SignMatrix(4, 4), corpus_matrix("H4")),
      std::invalid_argument);
}

TEST_CASE("invariant screens are frozen on recorded values") {
  CHECK(hadsw::snf_diagonal(corpus_matrix("H12")) ==
        hadsw::SnfDiagonal{1, 2, 2, 2, 2, 2, 6, 6, 6, 6, 6, 12});
  CHECK(hadsw::profile4(corpus_matrix("H16.0")) ==
        hadsw::Profile4{{0, 1680}, {16, 140}});
  CHECK(hadsw::profile4(corpus_matrix("H16.3")) ==
        hadsw::Profile4{{0, 1344}, {8, 448}, {16, 28}});
  CHECK(hadsw::profile4(corpus_matrix("H16.3")) ==
        hadsw::profile4(corpus_matrix("H16.4")));
  SUBCASE("snf divisibility chain") {
    const hadsw::SnfDiagonal d = hadsw::snf_diagonal(corpus_matrix("H20.0"));
    REQUIRE(d.size() == 20);
    for (std::size_t i = 1; i < d.size(); ++i) {
      CHECK(d[i] % d[i - 1] == 0);
    }
  }
  SUBCASE("profile4 needs at least four rows") {
    CHECK_THROWS_AS(hadsw::profile4(corpus_matrix("H2")),
                    std::invalid_argument);
  }
}

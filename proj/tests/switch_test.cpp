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
#include <array>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "hadsw/corpus.h"
#include "hadsw/had_switch.h"
#include "hadsw/sign_matrix.h"

using hadsw::ClosedQuadruple;
using hadsw::corpus_matrix;
using hadsw::HallSet;
using hadsw::SignMatrix;

TEST_CASE("closed-quadruple counts match the recorded values") {
  const std::map<std::string, int> want = {
      {"H4", 1},     {"H8", 14},    {"H12", 0},    {"H12'", 0},
      {"H16.0", 140}, {"H16.1", 76}, {"H16.2", 44}, {"H16.3", 28},
      {"H16.4", 28},  {"H20.0", 0},  {"H20.1", 0},  {"H20.2", 0}};
  for (const auto& [name, count] : want) {
    CAPTURE(name);
    CHECK(static_cast<int>(
              hadsw::find_closed_quadruples(corpus_matrix(name)).size()) ==
          count);
  }
}

TEST_CASE("found quadruples satisfy their own record") {
  const SignMatrix m = corpus_matrix("H16.2");
  const auto quads = hadsw::find_closed_quadruples(m);
  for (const ClosedQuadruple& q : quads) {
    CHECK(std::is_sorted(q.rowIdxs.begin(), q.rowIdxs.end()));
    const std::vector<int> prod = hadsw::row_product(m, q.rowIdxs);
    for (int v : prod) CHECK(v == q.productSign);
    CHECK(q.colFlips.size() == static_cast<std::size_t>(m.cols()));
    hadsw::check_closed_quadruple(m, q);  // throws on a bad record
  }
  ClosedQuadruple tampered = quads.front();
  tampered.productSign = -tampered.productSign;
  CHECK_THROWS_AS(hadsw::check_closed_quadruple(m, tampered),
                  std::invalid_argument);
}

TEST_CASE("quadruple switching yields a different Hadamard matrix") {
  const SignMatrix m = corpus_matrix("H8");
  for (const ClosedQuadruple& q : hadsw::find_closed_quadruples(m)) {
    for (int f = 1; f <= 4; ++f) {
      const SignMatrix sw = hadsw::switch_closed_quadruple(m, q, f);
      CHECK(hadsw::is_hadamard(sw));
      CHECK(sw != m);
    }
  }
}

TEST_CASE("quadruple switching is an involution") {
  // The switch negates the quadruple rows on one field's columns. Re-deriving
  // the record on the switched matrix keeps the same fields, so switching the
  // same field again restores the original.
  const SignMatrix m = corpus_matrix("H16.1");
  const auto quads = hadsw::find_closed_quadruples(m);
  REQUIRE(quads.size() >= 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (int f = 1; f <= 4; ++f) {
      const SignMatrix sw = hadsw::switch_closed_quadruple(m, quads[i], f);
      const auto swQuads = hadsw::find_closed_quadruples(sw);
      const auto it =
          std::find_if(swQuads.begin(), swQuads.end(),
                       [&](const ClosedQuadruple& q) {
                         return q.rowIdxs == quads[i].rowIdxs;
                       });
      REQUIRE(it != swQuads.end());
      CHECK(it->productSign == quads[i].productSign);
      CHECK(hadsw::switch_closed_quadruple(sw, *it, f) == m);
    }
  }
}

TEST_CASE("hall-set counts match the recorded values") {
  const std::map<std::string, int> want = {
      {"H4", 0},      {"H8", 56},     {"H12", 495},  {"H12'", 495},
      {"H16.0", 0},   {"H16.1", 256}, {"H16.2", 384}, {"H16.3", 448},
      {"H16.4", 448}, {"H20.0", 285}, {"H20.1", 285}, {"H20.2", 285},
      {"H36", 9}};
  for (const auto& [name, count] : want) {
    CAPTURE(name);
    CHECK(static_cast<int>(hadsw::find_hall_sets(corpus_matrix(name)).size()) ==
          count);
  }
}

TEST_CASE("hall sets have four minority entries on their hall columns") {
  const SignMatrix m = corpus_matrix("H12");
  for (const HallSet& h : hadsw::find_hall_sets(m)) {
    CHECK(std::is_sorted(h.rowIdxs.begin(), h.rowIdxs.end()));
    CHECK(std::is_sorted(h.hallCols.begin(), h.hallCols.end()));
    const std::vector<int> prod = hadsw::row_product(m, h.rowIdxs);
    int minority = 0;
    for (int c = 0; c < m.cols(); ++c) {
      const bool isHall = std::find(h.hallCols.begin(), h.hallCols.end(), c) !=
                          h.hallCols.end();
      if (prod[c] == h.minoritySign) ++minority;
      CHECK(prod[c] == (isHall ? h.minoritySign : -h.minoritySign));
    }
    CHECK(minority == 4);
  }
}

TEST_CASE("hall switching reproduces the recorded order-12 pair") {
  const SignMatrix m = corpus_matrix("H12");
  const auto halls = hadsw::find_hall_sets(m);
  const auto it = std::find_if(halls.begin(), halls.end(), [](const HallSet& h) {
    return h.rowIdxs == std::array<int, 4>{0, 1, 2, 3};
  });
  REQUIRE(it != halls.end());
  const SignMatrix sw = hadsw::switch_hall_set(m, *it, 1);
  CHECK(hadsw::is_hadamard(sw));
  CHECK(sw == corpus_matrix("H12'"));
}

TEST_CASE("hall standard form carries a checkable witness") {
  const SignMatrix m = corpus_matrix("H20.0");
  const auto halls = hadsw::find_hall_sets(m);
  REQUIRE(!halls.empty());
  for (std::size_t i = 0; i < 3; ++i) {
    const hadsw::HallStandardForm sf = hadsw::hall_standard_form(m, halls[i]);
    CHECK(sf.matrix == hadsw::apply_equivalence(m, sf.witness));
    CHECK(hadsw::is_hadamard(sf.matrix));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        CHECK(sf.matrix.get(r, c) == (r == c ? 1 : -1));
      }
    }
    // Interior blocks in field-sorted order: row and column sums within a
    // block are 2 on the diagonal blocks, 0 off them.
    const int k = m.rows() / 4 - 1;
    for (int bi = 0; bi < 4; ++bi) {
      for (int bj = 0; bj < 4; ++bj) {
        const int want = bi == bj ? 2 : 0;
        for (int r = 0; r < k; ++r) {
          int sum = 0;
          for (int c = 0; c < k; ++c) {
            sum += sf.matrix.get(4 + bi * k + r, 4 + bj * k + c);
          }
          CHECK(sum == want);
        }
        for (int c = 0; c < k; ++c) {
          int sum = 0;
          for (int r = 0; r < k; ++r) {
            sum += sf.matrix.get(4 + bi * k + r, 4 + bj * k + c);
          }
          CHECK(sum == want);
        }
      }
    }
  }
}

TEST_CASE("the four hall columns classify by the order mod 8") {
  const SignMatrix h8 = corpus_matrix("H8");
  for (const HallSet& h : hadsw::find_hall_sets(h8)) {
    CHECK(hadsw::classify_hall_columns(h8, h) ==
          hadsw::HallColumnsTag::kClosedQuadruple);
  }
  const SignMatrix h12 = corpus_matrix("H12");
  const auto halls12 = hadsw::find_hall_sets(h12);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(hadsw::classify_hall_columns(h12, halls12[i]) ==
          hadsw::HallColumnsTag::kHallSet);
  }
}

TEST_CASE("switching rejects bad arguments") {
  const SignMatrix m = corpus_matrix("H8");
  const auto quads = hadsw::find_closed_quadruples(m);
  CHECK_THROWS_AS(hadsw::switch_closed_quadruple(m, quads[0], 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(hadsw::switch_closed_quadruple(m, quads[0], 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(hadsw::find_closed_quadruples(SignMatrix(4, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hadsw::find_hall_sets(SignMatrix(4, 4)),
                  std::invalid_argument);
}

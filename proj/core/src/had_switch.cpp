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

#include "hadsw/had_switch.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hadsw {
namespace {

constexpr int kFCol[5][4] = {
    {0, 0, 0, 0},  // unused, blocks are 1-based
    {1, 1, 1, 1},
    {1, -1, -1, 1},
    {1, -1, 1, -1},
    {-1, -1, 1, 1},
};
constexpr int kGRow[5][4] = {
    {0, 0, 0, 0},
    {1, 1, 1, 1},
    {-1, 1, 1, -1},
    {-1, 1, -1, 1},
    {1, 1, -1, -1},
};

void require_hadamard(const SignMatrix& m, const char* who) {
  if (!is_hadamard(m)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not Hadamard");
  }
}

// Product sign of four rows at every column, as packed bits (set = -1).
std::vector<std::uint64_t> product_bits(const SignMatrix& m,
                                        const std::array<int, 4>& rows) {
  std::vector<std::uint64_t> acc(m.words_per_row(), 0);
  for (int r : rows) {
    const auto w = m.row_words(r);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= w[i];
  }
  return acc;
}

int popcount_words(const std::vector<std::uint64_t>& words) {
  int s = 0;
  for (std::uint64_t w : words) s += std::popcount(w);
  return s;
}

// Field label of a column that is invariant under column negations: the two
// XOR bits of the first three quadruple rows. Distinct labels on the four
// Hall columns are exactly what makes a quadruple a Hall set.
int flip_invariant_label(const SignMatrix& m, const std::array<int, 4>& rows,
                         int c) {
  const int x0 = m.get(rows[0], c) == -1;
  const int x1 = m.get(rows[1], c) == -1;
  const int x2 = m.get(rows[2], c) == -1;
  return ((x0 ^ x1) << 1) | (x0 ^ x2);
}

void check_rows_ascending(const SignMatrix& m, const std::array<int, 4>& rows,
                          const char* who) {
  for (int i = 0; i < 4; ++i) {
    if (rows[i] < 0 || rows[i] >= m.rows() || (i > 0 && rows[i] <= rows[i - 1])) {
      throw std::invalid_argument(std::string(who) +
                                  ": row indices must be ascending and in "
                                  "range");
    }
  }
}

bool is_hall_column(const HallSet& h, int c) {
  return c == h.hallCols[0] || c == h.hallCols[1] || c == h.hallCols[2] ||
         c == h.hallCols[3];
}

// Per-column field assignment of a Hall set: sign-fix the last Hall row when
// the minority is +1, put each Hall column into the field of its odd-entry
// position, and match every other column's pattern against +-f_b.
struct HallAssignment {
  std::array<int, 4> specialPos;   // position (0..3) of hall col i's odd entry
  std::array<int, 4> tSign;        // column sign of hall col i
  std::vector<int> colBlock;       // 1..4 per column (hall cols included)
  std::vector<int> colSign;        // +1 / -1 per column
  std::array<int, 4> hallRowSign;  // sign applied to rowIdxs[i]
};

HallAssignment hall_assignment(const SignMatrix& m, const HallSet& h,
                               const char* who) {
  const int n = m.cols();
  HallAssignment out;
  out.colBlock.assign(n, 0);
  out.colSign.assign(n, 1);
  out.hallRowSign = {1, 1, 1, 1};
  if (h.minoritySign == 1) out.hallRowSign[3] = -1;

  auto ent = [&](int i, int c) {
    return out.hallRowSign[i] * m.get(h.rowIdxs[i], c);
  };

  std::array<bool, 4> posTaken{false, false, false, false};
  for (int i = 0; i < 4; ++i) {
    const int c = h.hallCols[i];
    int negs = 0, negAt = -1, posAt = -1;
    for (int j = 0; j < 4; ++j) {
      if (ent(j, c) == -1) {
        ++negs;
        negAt = j;
      } else {
        posAt = j;
      }
    }
    int pos, t;
    if (negs == 3) {
      pos = posAt;
      t = 1;
    } else if (negs == 1) {
      pos = negAt;
      t = -1;
    } else {
      throw std::runtime_error(std::string(who) +
                               ": block invariants unsatisfiable");
    }
    if (posTaken[pos]) {
      throw std::runtime_error(std::string(who) +
                               ": block invariants unsatisfiable");
    }
    posTaken[pos] = true;
    out.specialPos[i] = pos;
    out.tSign[i] = t;
    out.colBlock[c] = pos + 1;
    out.colSign[c] = t;
  }

  for (int c = 0; c < n; ++c) {
    if (out.colBlock[c] != 0) continue;  // hall column, already assigned
    int pat[4];
    for (int j = 0; j < 4; ++j) pat[j] = ent(j, c);
    int hitBlock = 0, hitSign = 0;
    for (int b = 1; b <= 4 && hitBlock == 0; ++b) {
      bool plus = true, minus = true;
      for (int j = 0; j < 4; ++j) {
        plus = plus && pat[j] == kFCol[b][j];
        minus = minus && pat[j] == -kFCol[b][j];
      }
      if (plus) {
        hitBlock = b;
        hitSign = 1;
      } else if (minus) {
        hitBlock = b;
        hitSign = -1;
      }
    }
    if (hitBlock == 0) {
      throw std::runtime_error(std::string(who) +
                               ": block invariants unsatisfiable");
    }
    out.colBlock[c] = hitBlock;
    out.colSign[c] = hitSign;
  }
  return out;
}

FieldStructure fields_from_assignment(const HallAssignment& a) {
  FieldStructure fs;
  for (int c = 0; c < static_cast<int>(a.colBlock.size()); ++c) {
    fs.fields[a.colBlock[c] - 1].push_back(c);
  }
  return fs;
}

// Validates that h describes m: the product of its rows has minority sign
// entries exactly on hallCols.
void check_hall_set(const SignMatrix& m, const HallSet& h, const char* who) {
  check_rows_ascending(m, h.rowIdxs, who);
  const int n = m.cols();
  for (int i = 0; i < 4; ++i) {
    if (h.hallCols[i] < 0 || h.hallCols[i] >= n ||
        (i > 0 && h.hallCols[i] <= h.hallCols[i - 1])) {
      throw std::invalid_argument(std::string(who) +
                                  ": hall columns must be ascending and in "
                                  "range");
    }
  }
  if (h.minoritySign != 1 && h.minoritySign != -1) {
    throw std::invalid_argument(std::string(who) + ": bad minority sign");
  }
  const auto bits = product_bits(m, h.rowIdxs);
  std::array<bool, 4> seen{false, false, false, false};
  for (int c = 0; c < n; ++c) {
    const int v = ((bits[c / 64] >> (c % 64)) & 1u) ? -1 : 1;
    bool isHall = false;
    for (int i = 0; i < 4; ++i) {
      if (h.hallCols[i] == c) {
        isHall = true;
        seen[i] = true;
      }
    }
    if (isHall != (v == h.minoritySign)) {
      throw std::invalid_argument(std::string(who) +
                                  ": quadruple is not a Hall set of this "
                                  "matrix");
    }
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
    throw std::invalid_argument(std::string(who) + ": hall columns invalid");
  }
}

// Returns the HallSet record for a row quadruple, or false when the quadruple
// is not a Hall set. m must have at least 8 columns.
bool try_hall_set(const SignMatrix& m, const std::array<int, 4>& rows,
                  HallSet* out) {
  const int n = m.cols();
  const auto bits = product_bits(m, rows);
  const int neg = popcount_words(bits);
  int minority;
  if (neg == 4) {
    minority = -1;
  } else if (neg == n - 4 && n > 8) {
    minority = 1;
  } else {
    return false;
  }
  std::array<int, 4> hall{};
  int cnt = 0;
  for (int c = 0; c < n && cnt < 5; ++c) {
    const int v = ((bits[c / 64] >> (c % 64)) & 1u) ? -1 : 1;
    if (v == minority) {
      if (cnt == 4) return false;
      hall[cnt++] = c;
    }
  }
  int labels = 0;
  for (int c : hall) labels |= 1 << flip_invariant_label(m, rows, c);
  if (labels != 0b1111) return false;
  out->rowIdxs = rows;
  out->hallCols = hall;
  out->minoritySign = minority;
  out->fields = fields_from_assignment(hall_assignment(m, *out, "find_hall_sets"));
  return true;
}

}  // namespace

std::vector<ClosedQuadruple> find_closed_quadruples(const SignMatrix& m) {
  require_hadamard(m, "find_closed_quadruples");
  const int n = m.rows();
  const int words = m.words_per_row();
  std::vector<ClosedQuadruple> out;
  std::vector<std::uint64_t> allNeg(words, 0);
  for (int c = 0; c < n; ++c) allNeg[c / 64] |= std::uint64_t{1} << (c % 64);

  std::vector<std::uint64_t> xij(words), xijk(words), x4(words);
  for (int i = 0; i < n; ++i) {
    const auto wi = m.row_words(i);
    for (int j = i + 1; j < n; ++j) {
      const auto wj = m.row_words(j);
      for (int w = 0; w < words; ++w) xij[w] = wi[w] ^ wj[w];
      for (int k = j + 1; k < n; ++k) {
        const auto wk = m.row_words(k);
        for (int w = 0; w < words; ++w) xijk[w] = xij[w] ^ wk[w];
        for (int l = k + 1; l < n; ++l) {
          const auto wl = m.row_words(l);
          for (int w = 0; w < words; ++w) x4[w] = xijk[w] ^ wl[w];
          int sign;
          if (x4 == std::vector<std::uint64_t>(words, 0)) {
            sign = 1;
          } else if (x4 == allNeg) {
            sign = -1;
          } else {
            continue;
          }
          ClosedQuadruple q;
          q.rowIdxs = {i, j, k, l};
          q.productSign = sign;
          q.colFlips.resize(n);
          const int anchor = l;
          for (int c = 0; c < n; ++c) q.colFlips[c] = sign * m.get(anchor, c);
          SignMatrix canon = m;
          for (int c = 0; c < n; ++c) {
            if (q.colFlips[c] == -1) canon.negate_col(c);
          }
          if (sign == -1) canon.negate_row(anchor);
          q.fields = field_structure(canon, {i, j, k});
          out.push_back(std::move(q));
        }
      }
    }
  }
  return out;
}

void check_closed_quadruple(const SignMatrix& m, const ClosedQuadruple& q) {
  check_rows_ascending(m, q.rowIdxs, "check_closed_quadruple");
  const int n = m.cols();
  if (static_cast<int>(q.colFlips.size()) != n ||
      (q.productSign != 1 && q.productSign != -1)) {
    throw std::invalid_argument("check_closed_quadruple: invalid quadruple");
  }
  const int anchor = q.rowIdxs[3];
  for (int c = 0; c < n; ++c) {
    if (q.colFlips[c] != q.productSign * m.get(anchor, c)) {
      throw std::invalid_argument("check_closed_quadruple: invalid quadruple");
    }
  }
  SignMatrix canon = m;
  for (int c = 0; c < n; ++c) {
    if (q.colFlips[c] == -1) canon.negate_col(c);
  }
  if (q.productSign == -1) canon.negate_row(anchor);
  const FieldStructure fs =
      field_structure(canon, {q.rowIdxs[0], q.rowIdxs[1], q.rowIdxs[2]});
  for (int f = 0; f < 4; ++f) {
    if (fs.fields[f] != q.fields.fields[f]) {
      throw std::invalid_argument("check_closed_quadruple: invalid quadruple");
    }
  }
}

SignMatrix switch_closed_quadruple(const SignMatrix& m,
                                   const ClosedQuadruple& q, int fieldIdx) {
  if (fieldIdx < 1 || fieldIdx > 4) {
    throw std::invalid_argument(
        "switch_closed_quadruple: fieldIdx must be 1..4");
  }
  check_closed_quadruple(m, q);

  // Negating the field entries of the quadruple rows commutes with the
  // canonicalizing column flips, so apply it directly on the original.
  SignMatrix out = m;
  for (int r : q.rowIdxs) {
    for (int c : q.fields.fields[fieldIdx - 1]) {
      out.set(r, c, -out.get(r, c));
    }
  }
  return out;
}

std::vector<HallSet> find_hall_sets(const SignMatrix& m) {
  require_hadamard(m, "find_hall_sets");
  std::vector<HallSet> out;
  const int n = m.rows();
  if (n < 8) return out;
  HallSet h;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          if (try_hall_set(m, {i, j, k, l}, &h)) out.push_back(h);
        }
      }
    }
  }
  return out;
}

HallColumnsTag classify_hall_columns(const SignMatrix& m, const HallSet& h) {
  check_hall_set(m, h, "classify_hall_columns");
  const SignMatrix t = m.transposed();
  const auto bits = product_bits(t, h.hallCols);
  const int neg = popcount_words(bits);
  const int n = t.cols();
  if (neg == 0 || neg == n) return HallColumnsTag::kClosedQuadruple;
  HallSet ignored;
  if (n >= 8 && try_hall_set(t, h.hallCols, &ignored)) {
    return HallColumnsTag::kHallSet;
  }
  throw std::invalid_argument(
      "classify_hall_columns: hall columns form neither a closed quadruple "
      "nor a Hall set");
}

HallStandardForm hall_standard_form(const SignMatrix& m, const HallSet& h) {
  const char* who = "hall_standard_form";
  check_hall_set(m, h, who);
  const int n = m.rows();
  if (n % 8 != 4) {
    throw std::invalid_argument(
        "hall_standard_form: order must be 4 mod 8 (the Hall columns of an "
        "order 0 mod 8 matrix form a closed quadruple instead)");
  }
  const HallAssignment a = hall_assignment(m, h, who);
  const int m4 = n / 4 - 1;

  // Hall columns ordered by the position of their odd entry.
  std::array<int, 4> hallByPos{};
  for (int i = 0; i < 4; ++i) hallByPos[a.specialPos[i]] = h.hallCols[i];

  std::vector<int> rowBlock(n, 0), rowSignOf(n, 1);
  for (int i = 0; i < 4; ++i) rowSignOf[h.rowIdxs[i]] = a.hallRowSign[i];
  auto isHallRow = [&](int r) {
    return r == h.rowIdxs[0] || r == h.rowIdxs[1] || r == h.rowIdxs[2] ||
           r == h.rowIdxs[3];
  };
  for (int r = 0; r < n; ++r) {
    if (isHallRow(r)) continue;
    int pat[4];
    for (int j = 0; j < 4; ++j) {
      pat[j] = m.get(r, hallByPos[j]) * a.colSign[hallByPos[j]];
    }
    int hitBlock = 0, hitSign = 0;
    for (int b = 1; b <= 4 && hitBlock == 0; ++b) {
      bool plus = true, minus = true;
      for (int j = 0; j < 4; ++j) {
        plus = plus && pat[j] == kGRow[b][j];
        minus = minus && pat[j] == -kGRow[b][j];
      }
      if (plus) {
        hitBlock = b;
        hitSign = 1;
      } else if (minus) {
        hitBlock = b;
        hitSign = -1;
      }
    }
    if (hitBlock == 0) {
      throw std::runtime_error(std::string(who) +
                               ": block invariants unsatisfiable");
    }
    rowBlock[r] = hitBlock;
    rowSignOf[r] = hitSign;
  }

  for (int b = 1; b <= 4; ++b) {
    int rc = 0, cc = 0;
    for (int r = 0; r < n; ++r) rc += rowBlock[r] == b;
    for (int c = 0; c < n; ++c) cc += !is_hall_column(h, c) && a.colBlock[c] == b;
    if (rc != m4 || cc != m4) {
      throw std::runtime_error(std::string(who) +
                               ": block invariants unsatisfiable");
    }
  }

  EquivalenceWitness w;
  w.rowPerm.assign(h.rowIdxs.begin(), h.rowIdxs.end());
  for (int b = 1; b <= 4; ++b) {
    for (int r = 0; r < n; ++r) {
      if (rowBlock[r] == b) w.rowPerm.push_back(r);
    }
  }
  w.colPerm.assign(hallByPos.begin(), hallByPos.end());
  for (int b = 1; b <= 4; ++b) {
    for (int c = 0; c < n; ++c) {
      if (!is_hall_column(h, c) && a.colBlock[c] == b) w.colPerm.push_back(c);
    }
  }
  w.rowSigns.resize(n);
  w.colSigns.resize(n);
  std::vector<int> colSignOf = a.colSign;
  for (int i = 0; i < n; ++i) w.rowSigns[i] = rowSignOf[w.rowPerm[i]];
  for (int j = 0; j < n; ++j) w.colSigns[j] = colSignOf[w.colPerm[j]];

  SignMatrix s = apply_equivalence(m, w);

  // Verify every border entry and the interior block sums.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (s.get(i, j) != (i == j ? 1 : -1)) {
        throw std::runtime_error(std::string(who) +
                                 ": block invariants unsatisfiable");
      }
    }
  }
  for (int b = 1; b <= 4; ++b) {
    for (int j = 4 + (b - 1) * m4; j < 4 + b * m4; ++j) {
      for (int i = 0; i < 4; ++i) {
        if (s.get(i, j) != kFCol[b][i]) {
          throw std::runtime_error(std::string(who) +
                                   ": block invariants unsatisfiable");
        }
      }
    }
    for (int i = 4 + (b - 1) * m4; i < 4 + b * m4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (s.get(i, j) != kGRow[b][j]) {
          throw std::runtime_error(std::string(who) +
                                   ": block invariants unsatisfiable");
        }
      }
    }
  }
  for (int bi = 1; bi <= 4; ++bi) {
    for (int bj = 1; bj <= 4; ++bj) {
      const int want = bi == bj ? 2 : 0;
      const int r0 = 4 + (bi - 1) * m4;
      const int c0 = 4 + (bj - 1) * m4;
      for (int i = r0; i < r0 + m4; ++i) {
        int sum = 0;
        for (int j = c0; j < c0 + m4; ++j) sum += s.get(i, j);
        if (sum != want) {
          throw std::runtime_error(std::string(who) +
                                   ": block invariants unsatisfiable");
        }
      }
      for (int j = c0; j < c0 + m4; ++j) {
        int sum = 0;
        for (int i = r0; i < r0 + m4; ++i) sum += s.get(i, j);
        if (sum != want) {
          throw std::runtime_error(std::string(who) +
                                   ": block invariants unsatisfiable");
        }
      }
    }
  }
  return {std::move(s), std::move(w)};
}

SignMatrix switch_hall_set(const SignMatrix& m, const HallSet& h,
                           int fieldIdx) {
  if (fieldIdx < 1 || fieldIdx > 4) {
    throw std::invalid_argument("switch_hall_set: fieldIdx must be 1..4");
  }
  const HallStandardForm sf = hall_standard_form(m, h);
  const int n = m.rows();
  const int m4 = n / 4 - 1;

  // Negating border blocks F_i and G_i of the standard form amounts, back in
  // the original coordinates, to negating the Hall rows on the block-i
  // columns and the block-i rows on the Hall columns; the witness signs
  // cancel in pairs.
  SignMatrix out = m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 4 + (fieldIdx - 1) * m4; j < 4 + fieldIdx * m4; ++j) {
      const int r = sf.witness.rowPerm[i];
      const int c = sf.witness.colPerm[j];
      out.set(r, c, -out.get(r, c));
    }
  }
  for (int i = 4 + (fieldIdx - 1) * m4; i < 4 + fieldIdx * m4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int r = sf.witness.rowPerm[i];
      const int c = sf.witness.colPerm[j];
      out.set(r, c, -out.get(r, c));
    }
  }
  return out;
}

}  // namespace hadsw

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

#include "hadsw/sign_matrix.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace hadsw {
namespace {

// 0-based word count for a row of `cols` bits.
int words_for(int cols) { return (cols + 63) / 64; }

// Mask keeping only the valid bits of the last word of a row.
std::uint64_t tail_mask(int cols) {
  const int rem = cols % 64;
  return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

}  // namespace

SignMatrix::SignMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("SignMatrix: negative dimensions");
  }
  bits_.assign(static_cast<std::size_t>(rows_) * stride_, 0);
}

SignMatrix SignMatrix::FromStrings(const std::vector<std::string>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SignMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("SignMatrix::FromStrings: ragged row " +
                                  std::to_string(i));
    }
    for (int j = 0; j < c; ++j) {
      const char ch = rows[i][j];
      if (ch != '+' && ch != '-') {
        throw std::invalid_argument(
            "SignMatrix::FromStrings: bad character at row " +
            std::to_string(i) + " col " + std::to_string(j));
      }
      if (ch == '-') m.word(i, j) |= std::uint64_t{1} << bit(j);
    }
  }
  return m;
}

void SignMatrix::check_rc(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("SignMatrix: index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range");
  }
}

void SignMatrix::set(int r, int c, int value) {
  check_rc(r, c);
  if (value != 1 && value != -1) {
    throw std::invalid_argument("SignMatrix::set: value must be +1 or -1");
  }
  const std::uint64_t mask = std::uint64_t{1} << bit(c);
  if (value == -1) {
    word(r, c) |= mask;
  } else {
    word(r, c) &= ~mask;
  }
}

void SignMatrix::negate_row(int r) {
  check_rc(r, 0);
  const std::size_t base = static_cast<std::size_t>(r) * stride_;
  for (int w = 0; w < stride_; ++w) bits_[base + w] = ~bits_[base + w];
  bits_[base + stride_ - 1] &= tail_mask(cols_);
}

void SignMatrix::negate_col(int c) {
  check_rc(0, c);
  const std::uint64_t mask = std::uint64_t{1} << bit(c);
  for (int r = 0; r < rows_; ++r) word(r, c) ^= mask;
}

void SignMatrix::swap_rows(int r1, int r2) {
  check_rc(r1, 0);
  check_rc(r2, 0);
  const std::size_t b1 = static_cast<std::size_t>(r1) * stride_;
  const std::size_t b2 = static_cast<std::size_t>(r2) * stride_;
  for (int w = 0; w < stride_; ++w) std::swap(bits_[b1 + w], bits_[b2 + w]);
}

void SignMatrix::swap_cols(int c1, int c2) {
  check_rc(0, c1);
  check_rc(0, c2);
  if (c1 == c2) return;
  for (int r = 0; r < rows_; ++r) {
    const int v1 = get(r, c1);
    set(r, c1, get(r, c2));
    set(r, c2, v1);
  }
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (get(r, c) == -1) t.word(c, r) |= std::uint64_t{1} << bit(r);
    }
  }
  return t;
}

std::string SignMatrix::row_string(int r) const {
  check_rc(r, cols_ == 0 ? -1 : 0);
  std::string s(cols_, '+');
  for (int c = 0; c < cols_; ++c) {
    if (get(r, c) == -1) s[c] = '-';
  }
  return s;
}

std::vector<std::string> SignMatrix::to_strings() const {
  std::vector<std::string> rows;
  rows.reserve(rows_);
  for (int r = 0; r < rows_; ++r) rows.push_back(row_string(r));
  return rows;
}

SignMatrix apply_equivalence(const SignMatrix& m, const EquivalenceWitness& w) {
  const int nr = m.rows();
  const int nc = m.cols();
  auto check_perm = [](const std::vector<int>& p, int n, const char* what) {
    if (static_cast<int>(p.size()) != n) {
      throw std::invalid_argument(std::string("apply_equivalence: ") + what +
                                  " has wrong length");
    }
    std::vector<char> seen(n, 0);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v]) {
        throw std::invalid_argument(std::string("apply_equivalence: ") + what +
                                    " is not a permutation");
      }
      seen[v] = 1;
    }
  };
  auto check_signs = [](const std::vector<int>& s, int n, const char* what) {
    if (static_cast<int>(s.size()) != n) {
      throw std::invalid_argument(std::string("apply_equivalence: ") + what +
                                  " has wrong length");
    }
    for (int v : s) {
      if (v != 1 && v != -1) {
        throw std::invalid_argument(std::string("apply_equivalence: ") + what +
                                    " entries must be +1 or -1");
      }
    }
  };
  check_perm(w.rowPerm, nr, "rowPerm");
  check_perm(w.colPerm, nc, "colPerm");
  check_signs(w.rowSigns, nr, "rowSigns");
  check_signs(w.colSigns, nc, "colSigns");

  SignMatrix out(nr, nc);
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) {
      out.set(r, c,
              w.rowSigns[r] * w.colSigns[c] * m.get(w.rowPerm[r], w.colPerm[c]));
    }
  }
  return out;
}

bool is_hadamard(const SignMatrix& m) {
  const int n = m.rows();
  if (n != m.cols() || n == 0) return false;
  // Rows i and j are orthogonal iff they differ in exactly n/2 positions.
  for (int i = 0; i < n; ++i) {
    const auto wi = m.row_words(i);
    for (int j = i + 1; j < n; ++j) {
      const auto wj = m.row_words(j);
      int diff = 0;
      for (std::size_t w = 0; w < wi.size(); ++w) {
        diff += std::popcount(wi[w] ^ wj[w]);
      }
      if (2 * diff != n) return false;
    }
  }
  return true;
}

std::vector<int> row_product(const SignMatrix& m, std::span<const int> rowIdxs) {
  std::vector<std::uint64_t> acc(m.words_per_row(), 0);
  for (int r : rowIdxs) {
    if (r < 0 || r >= m.rows()) {
      throw std::out_of_range("row_product: row index out of range");
    }
    const auto w = m.row_words(r);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= w[i];
  }
  std::vector<int> out(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    out[c] = 1 - 2 * static_cast<int>((acc[c / 64] >> (c % 64)) & 1u);
  }
  return out;
}

SignMatrix normalize(const SignMatrix& m) {
  SignMatrix out = m;
  if (out.rows() == 0 || out.cols() == 0) return out;
  for (int c = 0; c < out.cols(); ++c) {
    if (out.get(0, c) == -1) out.negate_col(c);
  }
  for (int r = 0; r < out.rows(); ++r) {
    if (out.get(r, 0) == -1) out.negate_row(r);
  }
  return out;
}

std::vector<std::array<int, 3>> find_3normalized_triples(const SignMatrix& m) {
  std::vector<std::array<int, 3>> out;
  const int n = m.rows();
  const int words = m.words_per_row();
  for (int i = 0; i < n; ++i) {
    const auto wi = m.row_words(i);
    for (int j = i + 1; j < n; ++j) {
      const auto wj = m.row_words(j);
      for (int k = j + 1; k < n; ++k) {
        const auto wk = m.row_words(k);
        bool allOnes = true;
        for (int w = 0; w < words && allOnes; ++w) {
          allOnes = (wi[w] ^ wj[w] ^ wk[w]) == 0;
        }
        if (allOnes) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

FieldStructure field_structure(const SignMatrix& m, std::array<int, 3> triple) {
  for (int r : triple) {
    if (r < 0 || r >= m.rows()) {
      throw std::invalid_argument("field_structure: row index out of range");
    }
  }
  FieldStructure fs;
  for (int c = 0; c < m.cols(); ++c) {
    const int b0 = m.get(triple[0], c) == -1;
    const int b1 = m.get(triple[1], c) == -1;
    const int b2 = m.get(triple[2], c) == -1;
    // Valid patterns carry an even number of -1 entries; the key enumerates
    // them as 000, 011, 101, 110.
    const int key = b0 * 4 + b1 * 2 + b2;
    int field;
    switch (key) {
      case 0b000: field = 0; break;
      case 0b011: field = 1; break;
      case 0b101: field = 2; break;
      case 0b110: field = 3; break;
      default:
        throw std::invalid_argument(
            "field_structure: triple is not 3-normalized (odd pattern at "
            "column " + std::to_string(c) + ")");
    }
    fs.fields[field].push_back(c);
  }
  return fs;
}

std::array<int, 4> field_sums(const SignMatrix& m, std::array<int, 3> triple,
                              int rowIdx) {
  if (rowIdx < 0 || rowIdx >= m.rows()) {
    throw std::invalid_argument("field_sums: row index out of range");
  }
  const FieldStructure fs = field_structure(m, triple);
  std::array<int, 4> sums{0, 0, 0, 0};
  for (int f = 0; f < 4; ++f) {
    for (int c : fs.fields[f]) sums[f] += m.get(rowIdx, c);
  }
  return sums;
}

}  // namespace hadsw

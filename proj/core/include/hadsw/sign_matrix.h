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

#ifndef HADSW_SIGN_MATRIX_H_
#define HADSW_SIGN_MATRIX_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hadsw {

// Dense matrix over {+1, -1}, bit-packed one row per word run (bit set means
// the entry is -1). Entrywise products of rows reduce to word XORs, which is
// what nearly every algorithm in this library does in its inner loop.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(int rows, int cols);  // all entries +1

  // Builds from rows of '+'/'-' characters, e.g. {"++", "+-"}.
  // Throws std::invalid_argument on ragged rows or other characters.
  static SignMatrix FromStrings(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Entry access with values +1 / -1.
  int get(int r, int c) const {
    return 1 - 2 * static_cast<int>((word(r, c) >> bit(c)) & 1u);
  }
  void set(int r, int c, int value);

  void negate_row(int r);
  void negate_col(int c);
  void swap_rows(int r1, int r2);
  void swap_cols(int c1, int c2);

  SignMatrix transposed() const;

  // Row of '+'/'-' characters; inverse of FromStrings.
  std::string row_string(int r) const;
  std::vector<std::string> to_strings() const;

  bool operator==(const SignMatrix& other) const = default;

  // Packed words of row r (tail bits beyond cols() are always zero).
  std::span<const std::uint64_t> row_words(int r) const {
    return {bits_.data() + static_cast<std::size_t>(r) * stride_,
            static_cast<std::size_t>(stride_)};
  }
  int words_per_row() const { return stride_; }

 private:
  std::uint64_t& word(int r, int c) {
    return bits_[static_cast<std::size_t>(r) * stride_ + c / 64];
  }
  const std::uint64_t& word(int r, int c) const {
    return bits_[static_cast<std::size_t>(r) * stride_ + c / 64];
  }
  static int bit(int c) { return c % 64; }
  void check_rc(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Row/column permutation combined with row/column negations:
//   result[r][c] = rowSigns[r] * colSigns[c] * m[rowPerm[r]][colPerm[c]].
struct EquivalenceWitness {
  std::vector<int> rowPerm;
  std::vector<int> colPerm;
  std::vector<int> rowSigns;  // +1 / -1
  std::vector<int> colSigns;  // +1 / -1
};

SignMatrix apply_equivalence(const SignMatrix& m, const EquivalenceWitness& w);

// True iff m is square and all distinct rows are orthogonal.
bool is_hadamard(const SignMatrix& m);

// Entrywise product of the given rows, as a vector of +1/-1 values.
std::vector<int> row_product(const SignMatrix& m, std::span<const int> rowIdxs);

// Negates columns until row 0 is all ones, then rows until column 0 is.
SignMatrix normalize(const SignMatrix& m);

// All i < j < k whose entrywise row product is the all-ones vector.
std::vector<std::array<int, 3>> find_3normalized_triples(const SignMatrix& m);

// Column partition induced by a 3-normalized triple (i, j, k): field f holds
// the columns whose (row i, row j, row k) pattern is
//   f=0: (+1,+1,+1)   f=1: (+1,-1,-1)   f=2: (-1,+1,-1)   f=3: (-1,-1,+1).
// For a Hadamard matrix of order n each field has exactly n/4 columns.
struct FieldStructure {
  std::array<std::vector<int>, 4> fields;
};

// Throws std::invalid_argument if the triple is not 3-normalized in m.
FieldStructure field_structure(const SignMatrix& m, std::array<int, 3> triple);

// Sums of row `rowIdx` over the four fields of the triple.
std::array<int, 4> field_sums(const SignMatrix& m, std::array<int, 3> triple,
                              int rowIdx);

}  // namespace hadsw

#endif  // HADSW_SIGN_MATRIX_H_

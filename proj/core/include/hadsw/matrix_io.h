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

#ifndef HADSW_MATRIX_IO_H_
#define HADSW_MATRIX_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "hadsw/sign_matrix.h"

namespace hadsw {

// kPlusMinus: one row per line, contiguous '+'/'-' characters.
// kPaperStyle: one row per line, whitespace-separated tokens '1' and '-'.
enum class MatrixFormat { kPlusMinus, kPaperStyle };

// Positions are 1-based over the whole input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int row, int col, const std::string& what)
      : std::runtime_error("parse error at row " + std::to_string(row) +
                           ", col " + std::to_string(col) + ": " + what),
        row_(row),
        col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

// Blank lines separate matrices; throws ParseError on ragged rows or
// illegal characters.
std::vector<SignMatrix> parse_matrices(const std::string& text,
                                       MatrixFormat format);

// As parse_matrices, but the text must contain exactly one matrix.
SignMatrix parse_matrix(const std::string& text, MatrixFormat format);

// Round-trips through parse_matrix bit-exactly. Ends with a newline.
std::string emit_matrix(const SignMatrix& m, MatrixFormat format);

}  // namespace hadsw

#endif  // HADSW_MATRIX_IO_H_

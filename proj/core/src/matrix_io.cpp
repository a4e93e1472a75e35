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

#include "hadsw/matrix_io.h"

#include <sstream>

namespace hadsw {
namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

// One parsed row as signs, plus enough position info for error reports.
std::vector<int> parse_row(const std::string& line, int lineNo,
                           MatrixFormat format) {
  std::vector<int> row;
  if (format == MatrixFormat::kPlusMinus) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '\r' || c == ' ' || c == '\t') {
        // Trailing whitespace only; anything after it is misplaced.
        for (std::size_t j = i; j < line.size(); ++j) {
          const char d = line[j];
          if (d != '\r' && d != ' ' && d != '\t') {
            throw ParseError(lineNo, static_cast<int>(j) + 1,
                             std::string("illegal character '") + d + "'");
          }
        }
        break;
      }
      if (c == '+') {
        row.push_back(1);
      } else if (c == '-') {
        row.push_back(-1);
      } else {
        throw ParseError(lineNo, static_cast<int>(i) + 1,
                         std::string("illegal character '") + c + "'");
      }
    }
  } else {
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r') {
        ++j;
      }
      const std::string token = line.substr(i, j - i);
      if (token == "1") {
        row.push_back(1);
      } else if (token == "-") {
        row.push_back(-1);
      } else {
        throw ParseError(lineNo, static_cast<int>(i) + 1,
                         "illegal token '" + token + "'");
      }
      i = j;
    }
  }
  return row;
}

SignMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  SignMatrix m(static_cast<int>(rows.size()),
               static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
    }
  }
  return m;
}

}  // namespace

std::vector<SignMatrix> parse_matrices(const std::string& text,
                                       MatrixFormat format) {
  std::vector<SignMatrix> out;
  std::vector<std::vector<int>> rows;

  const auto flush = [&] {
    if (!rows.empty()) {
      out.push_back(matrix_from_rows(rows));
      rows.clear();
    }
  };

  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (is_blank(line)) {
      flush();
      continue;
    }
    std::vector<int> row = parse_row(line, lineNo, format);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(lineNo, static_cast<int>(row.size()) + 1,
                       "ragged row: expected " +
                           std::to_string(rows.front().size()) +
                           " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  flush();
  return out;
}

SignMatrix parse_matrix(const std::string& text, MatrixFormat format) {
  const std::vector<SignMatrix> all = parse_matrices(text, format);
  if (all.empty()) {
    throw ParseError(1, 1, "no matrix in input");
  }
  if (all.size() > 1) {
    throw ParseError(1, 1, "expected one matrix, found " +
                               std::to_string(all.size()));
  }
  return all.front();
}

std::string emit_matrix(const SignMatrix& m, MatrixFormat format) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const bool plus = m.get(r, c) == 1;
      if (format == MatrixFormat::kPlusMinus) {
        out += plus ? '+' : '-';
      } else {
        if (c > 0) out += ' ';
        out += plus ? '1' : '-';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace hadsw

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

#include "hadsw/invariants.h"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace hadsw {

SnfDiagonal snf_diagonal(const SignMatrix& m) {
  const int nr = m.rows();
  const int nc = m.cols();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) a[r][c] = m.get(r, c);
  }

  SnfDiagonal diag;
  int t = 0;
  const int tmax = std::min(nr, nc);
  while (t < tmax) {
    // Move a nonzero entry of minimal absolute value to the pivot position.
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i) {
      for (int j = t; j < nc; ++j) {
        if (a[i][j] != 0 &&
            (pi < 0 ||
             mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // remaining submatrix is zero
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (int i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pj]);
    }

    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        if (q != 0) {
          for (int j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) {
          // Remainder is strictly smaller; promote it to pivot and restart.
          std::swap(a[t], a[i]);
          again = true;
        }
      }
      for (int j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        if (q != 0) {
          for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) {
          for (int i = t; i < nr; ++i) std::swap(a[i][t], a[i][j]);
          again = true;
        }
      }
    }

    const mpz_class d = abs(a[t][t]);
    // The pivot must divide every remaining entry; if not, fold the offending
    // row into the pivot row and eliminate again.
    bool fixed = false;
    for (int i = t + 1; i < nr && !fixed; ++i) {
      for (int j = t + 1; j < nc && !fixed; ++j) {
        if (a[i][j] % d != 0) {
          for (int k = t; k < nc; ++k) a[t][k] += a[i][k];
          fixed = true;
        }
      }
    }
    if (fixed) continue;
    diag.push_back(d);
    ++t;
  }
  return diag;
}

Profile4 profile4(const SignMatrix& m) {
  const int n = m.rows();
  if (n < 4) {
    throw std::invalid_argument("profile4: matrix needs at least 4 rows");
  }
  const int cols = m.cols();
  const int words = m.words_per_row();
  Profile4 out;
  std::vector<std::uint64_t> xij(words), xijk(words);
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
          int neg = 0;
          for (int w = 0; w < words; ++w) {
            neg += std::popcount(xijk[w] ^ wl[w]);
          }
          ++out[std::labs(cols - 2L * neg)];
        }
      }
    }
  }
  return out;
}

}  // namespace hadsw

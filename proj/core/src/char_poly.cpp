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

#include "hadsw/char_poly.h"

#include <array>
#include <cstdint>

namespace hadsw {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the base set decides primality for all inputs
// below 3.3 * 10^24.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Characteristic polynomial mod p, coefficients ascending by power.
// Hessenberg reduction by similarity transforms, then the standard
// determinant recurrence along the last column.
std::vector<u64> char_poly_mod(const LoopGraph& g, u64 p) {
  const int n = g.vertex_count();
  std::vector<std::vector<u64>> a(n, std::vector<u64>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.has_edge(i, j)) a[i][j] = 1;
    }
  }

  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(a[piv], a[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k + 1]);
    }
    const u64 inv = powmod(a[k + 1][k], p - 2, p);
    for (int i = k + 2; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const u64 f = mulmod(a[i][k], inv, p);
      for (int j = k; j < n; ++j) {
        a[i][j] = (a[i][j] + p - mulmod(f, a[k + 1][j], p)) % p;
      }
      for (int r = 0; r < n; ++r) {
        a[r][k + 1] = (a[r][k + 1] + mulmod(f, a[r][i], p)) % p;
      }
    }
  }

  // polys[m] = char poly of the leading m x m block, ascending coefficients.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (int m = 1; m <= n; ++m) {
    const std::vector<u64>& prev = polys[m - 1];
    std::vector<u64> cur(m + 1, 0);
    const u64 diag = a[m - 1][m - 1];
    for (int d = 0; d < m; ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mulmod(diag, prev[d], p)) % p;
    }
    u64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = mulmod(prod, a[i][i - 1], p);
      if (prod == 0) break;
      const u64 coeff = mulmod(a[i - 1][m - 1], prod, p);
      if (coeff == 0) continue;
      const std::vector<u64>& pi = polys[i - 1];
      for (int d = 0; d < i; ++d) {
        cur[d] = (cur[d] + p - mulmod(coeff, pi[d], p)) % p;
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

// Largest absolute value a coefficient can take: |c_k| <= C(V,k) * k^(k/2)
// by Hadamard's inequality on principal minors with entries in {0, 1}.
mpz_class coefficient_bound(int n) {
  mpz_class best = 1;
  for (int k = 0; k <= n; ++k) {
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), n, k);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), k == 0 ? 1 : k, (k + 1) / 2);
    const mpz_class term = bin * pw;
    if (term > best) best = term;
  }
  return best;
}

}  // namespace

std::vector<mpz_class> char_poly(const LoopGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {mpz_class(1)};

  const mpz_class bound = 2 * coefficient_bound(n) + 1;
  std::vector<u64> primes;
  mpz_class prod = 1;
  for (u64 cand = (u64{1} << 61) - 1; prod < bound; --cand) {
    if (is_prime(cand)) {
      primes.push_back(cand);
      prod *= mpz_class(static_cast<unsigned long>(cand));
    }
  }

  // Incremental CRT: coeff == residue (mod prime), lifted symmetrically.
  std::vector<mpz_class> coeffs(n + 1, 0);
  mpz_class modulus = 1;
  for (u64 p : primes) {
    const std::vector<u64> rem = char_poly_mod(g, p);
    const mpz_class mp(static_cast<unsigned long>(p));
    if (modulus == 1) {
      for (int d = 0; d <= n; ++d) {
        coeffs[d] = static_cast<unsigned long>(rem[d]);
      }
    } else {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
      for (int d = 0; d <= n; ++d) {
        const mpz_class cur = coeffs[d] % mp;
        mpz_class delta = (static_cast<unsigned long>(rem[d]) - cur) % mp;
        if (delta < 0) delta += mp;
        coeffs[d] += modulus * ((delta * inv) % mp);
      }
    }
    modulus *= mp;
  }
  const mpz_class half = modulus / 2;
  for (mpz_class& c : coeffs) {
    mpz_class r = c % modulus;
    if (r < 0) r += modulus;
    if (r > half) r -= modulus;
    c = r;
  }

  // Ascending to descending power order.
  std::vector<mpz_class> out(n + 1);
  for (int d = 0; d <= n; ++d) out[d] = coeffs[n - d];
  return out;
}

bool cospectral(const LoopGraph& a, const LoopGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return char_poly(a) == char_poly(b);
}

}  // namespace hadsw

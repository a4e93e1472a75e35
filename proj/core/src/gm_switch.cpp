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

#include "hadsw/gm_switch.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hadsw {
namespace {

using u64 = std::uint64_t;

std::vector<u64> vertex_mask(const LoopGraph& g, const std::vector<int>& vs) {
  std::vector<u64> mask(g.words_per_row(), 0);
  for (int v : vs) mask[v / 64] |= u64{1} << (v % 64);
  return mask;
}

int count_in_mask(const LoopGraph& g, int v, const std::vector<u64>& mask) {
  const auto row = g.row_words(v);
  int c = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    c += std::popcount(row[w] & mask[w]);
  }
  return c;
}

bool adjacent_to_all(const LoopGraph& g, int v, const std::vector<u64>& mask) {
  const auto row = g.row_words(v);
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if ((row[w] & mask[w]) != mask[w]) return false;
  }
  return true;
}

bool no_common_neighbours(const LoopGraph& g, int x, int y) {
  const auto rx = g.row_words(x);
  const auto ry = g.row_words(y);
  for (int w = 0; w < g.words_per_row(); ++w) {
    u64 common = rx[w] & ry[w];
    if (w == x / 64) common &= ~(u64{1} << (x % 64));
    if (w == y / 64) common &= ~(u64{1} << (y % 64));
    if (common) return false;
  }
  return true;
}

void check_is_partition(const LoopGraph& g, const SwitchingPartition& p,
                        const char* who) {
  std::vector<int> all = p.rest;
  for (const std::vector<int>& cell : p.cells) {
    all.insert(all.end(), cell.begin(), cell.end());
  }
  std::sort(all.begin(), all.end());
  bool ok = static_cast<int>(all.size()) == g.vertex_count();
  for (std::size_t i = 0; ok && i < all.size(); ++i) {
    ok = all[i] == static_cast<int>(i);
  }
  if (!ok) {
    throw std::invalid_argument(std::string(who) + ": not a partition");
  }
}

// Neighbour count of x in a cell, never counting x's own loop.
int cell_degree(const LoopGraph& g, int x, const std::vector<u64>& mask,
                bool xInCell) {
  int c = count_in_mask(g, x, mask);
  if (xInCell && g.has_loop(x)) --c;
  return c;
}

}  // namespace

std::vector<std::string> validate_partition(const LoopGraph& g,
                                            const SwitchingPartition& p) {
  check_is_partition(g, p, "validate_partition");
  std::vector<std::string> bad;
  const int t = static_cast<int>(p.cells.size());

  for (int i = 0; i < t; ++i) {
    bool anyLoop = false, anyPlain = false;
    for (int x : p.cells[i]) (g.has_loop(x) ? anyLoop : anyPlain) = true;
    if (anyLoop && anyPlain) {
      bad.push_back("C" + std::to_string(i + 1) + ": mixed loop status");
    }
  }

  std::vector<std::vector<u64>> masks;
  masks.reserve(t);
  for (const std::vector<int>& cell : p.cells) {
    masks.push_back(vertex_mask(g, cell));
  }

  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      std::set<int> degs;
      for (int x : p.cells[i]) {
        degs.insert(cell_degree(g, x, masks[j], i == j));
      }
      if (degs.size() > 1) {
        if (i == j) {
          bad.push_back("C" + std::to_string(i + 1) +
                        ": not regular within itself");
        } else {
          bad.push_back("C" + std::to_string(i + 1) + "->C" +
                        std::to_string(j + 1) + ": not cell-regular");
        }
      }
    }
  }

  for (int d : p.rest) {
    for (int i = 0; i < t; ++i) {
      const int sz = static_cast<int>(p.cells[i].size());
      const int k = count_in_mask(g, d, masks[i]);
      if (k != 0 && k != sz && 2 * k != sz) {
        bad.push_back("D vertex " + std::to_string(d) + " has " +
                      std::to_string(k) + " neighbours in C" +
                      std::to_string(i + 1) + " (|C" + std::to_string(i + 1) +
                      "|=" + std::to_string(sz) + ")");
      }
    }
  }
  return bad;
}

LoopGraph gm_switch(const LoopGraph& g, const SwitchingPartition& p) {
  const std::vector<std::string> bad = validate_partition(g, p);
  if (!bad.empty()) {
    throw std::invalid_argument("gm_switch: invalid partition: " +
                                bad.front());
  }
  LoopGraph out = g;
  for (const std::vector<int>& cell : p.cells) {
    const std::vector<u64> mask = vertex_mask(g, cell);
    const int sz = static_cast<int>(cell.size());
    for (int d : p.rest) {
      const int k = count_in_mask(g, d, mask);
      if (k == 0 || k == sz) continue;
      for (int x : cell) out.set_edge(d, x, !out.has_edge(d, x));
    }
  }
  return out;
}

SwitchingPartition quadruple_partition(const SignMatrix& m,
                                       const ClosedQuadruple& q,
                                       int fieldIdx) {
  if (fieldIdx < 1 || fieldIdx > 4) {
    throw std::invalid_argument("quadruple_partition: fieldIdx must be 1..4");
  }
  if (!is_hadamard(m)) {
    throw std::invalid_argument("quadruple_partition: matrix is not Hadamard");
  }
  if (m.rows() < 8) {
    throw std::invalid_argument(
        "quadruple_partition: order must be at least 8");
  }
  check_closed_quadruple(m, q);

  const int n = m.rows();
  const auto v = [](int i) { return i; };
  const auto vp = [n](int i) { return n + i; };
  const auto w = [n](int j) { return 2 * n + j; };
  const auto wp = [n](int j) { return 3 * n + j; };

  SwitchingPartition p;
  for (int r : q.rowIdxs) p.rest.push_back(v(r));
  for (int r : q.rowIdxs) p.rest.push_back(vp(r));

  const std::vector<int>& chosen = q.fields.fields[fieldIdx - 1];
  std::vector<int> c1;
  for (int c : chosen) c1.push_back(w(c));
  for (int c : chosen) c1.push_back(wp(c));
  p.cells.push_back(std::move(c1));

  std::vector<int> c2;
  for (int r = 0; r < n; ++r) {
    if (std::find(q.rowIdxs.begin(), q.rowIdxs.end(), r) == q.rowIdxs.end()) {
      c2.push_back(v(r));
    }
  }
  const std::size_t restRows = c2.size();
  for (std::size_t i = 0; i < restRows; ++i) c2.push_back(vp(c2[i]));
  p.cells.push_back(std::move(c2));

  std::vector<const std::vector<int>*> others;
  for (int f = 0; f < 4; ++f) {
    if (f != fieldIdx - 1) others.push_back(&q.fields.fields[f]);
  }
  std::sort(others.begin(), others.end(),
            [](const std::vector<int>* a, const std::vector<int>* b) {
              return a->front() < b->front();
            });
  for (const std::vector<int>* f : others) {
    const int c0 = f->front();
    std::vector<int> odd, even;
    for (int c : *f) {
      if (q.colFlips[c] == q.colFlips[c0]) {
        odd.push_back(w(c));
        even.push_back(wp(c));
      } else {
        odd.push_back(wp(c));
        even.push_back(w(c));
      }
    }
    p.cells.push_back(std::move(odd));
    p.cells.push_back(std::move(even));
  }
  return p;
}

SwitchingPartition hall_partition(const SignMatrix& m, const HallSet& h,
                                  int fieldIdx) {
  if (fieldIdx < 1 || fieldIdx > 4) {
    throw std::invalid_argument("hall_partition: fieldIdx must be 1..4");
  }
  const HallStandardForm sf = hall_standard_form(m, h);
  const EquivalenceWitness& wit = sf.witness;
  const int n = m.rows();
  const int m4 = n / 4 - 1;

  const auto v = [n](int i, int s) { return s == 1 ? i : n + i; };
  const auto w = [n](int j, int s) { return s == 1 ? 2 * n + j : 3 * n + j; };

  SwitchingPartition p;
  for (int i = 0; i < 4; ++i) {
    p.rest.push_back(v(wit.rowPerm[i], wit.rowSigns[i]));
  }
  for (int i = 0; i < 4; ++i) {
    p.rest.push_back(v(wit.rowPerm[i], -wit.rowSigns[i]));
  }
  for (int j = 0; j < 4; ++j) {
    p.rest.push_back(w(wit.colPerm[j], wit.colSigns[j]));
  }
  for (int j = 0; j < 4; ++j) {
    p.rest.push_back(w(wit.colPerm[j], -wit.colSigns[j]));
  }

  const auto rowcell = [&](int b, int s) {
    std::vector<int> cell;
    for (int i = 4 + (b - 1) * m4; i < 4 + b * m4; ++i) {
      cell.push_back(v(wit.rowPerm[i], s * wit.rowSigns[i]));
    }
    return cell;
  };
  const auto colcell = [&](int b, int s) {
    std::vector<int> cell;
    for (int j = 4 + (b - 1) * m4; j < 4 + b * m4; ++j) {
      cell.push_back(w(wit.colPerm[j], s * wit.colSigns[j]));
    }
    return cell;
  };

  std::vector<int> blocks = {fieldIdx};
  for (int b = 1; b <= 4; ++b) {
    if (b != fieldIdx) blocks.push_back(b);
  }

  std::vector<int> c1 = rowcell(blocks[0], 1);
  {
    const std::vector<int> neg = rowcell(blocks[0], -1);
    c1.insert(c1.end(), neg.begin(), neg.end());
  }
  std::vector<int> c2 = colcell(blocks[0], 1);
  {
    const std::vector<int> neg = colcell(blocks[0], -1);
    c2.insert(c2.end(), neg.begin(), neg.end());
  }
  p.cells.push_back(std::move(c1));
  p.cells.push_back(std::move(c2));
  for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
    p.cells.push_back(rowcell(blocks[bi], 1));
    p.cells.push_back(rowcell(blocks[bi], -1));
    p.cells.push_back(colcell(blocks[bi], 1));
    p.cells.push_back(colcell(blocks[bi], -1));
  }
  return p;
}

namespace {

// Shared pieces of the two recognizers. Cells are addressed 1-based; a
// missing cell makes any condition naming it fail rather than throw.
struct RecognizerContext {
  const LoopGraph* g = nullptr;
  const SwitchingPartition* p = nullptr;

  const std::vector<int>* cell(int idx1) const {
    if (idx1 < 1 || idx1 > static_cast<int>(p->cells.size())) return nullptr;
    return &p->cells[idx1 - 1];
  }

  bool all_loops(const std::vector<int>& vs, bool looped) const {
    for (int x : vs) {
      if (g->has_loop(x) != looped) return false;
    }
    return true;
  }

  // Every vertex of vs has another vertex of vs, of the same loop status
  // when sameStatus is set, sharing no neighbour with it.
  bool paired(const std::vector<int>& vs, bool sameStatus) const {
    for (int x : vs) {
      bool found = false;
      for (int y : vs) {
        if (y == x) continue;
        if (sameStatus && g->has_loop(x) != g->has_loop(y)) continue;
        if (no_common_neighbours(*g, x, y)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  // Half of cell vs sees the same four rest vertices.
  bool half_same_four(const std::vector<int>& vs) const {
    if (vs.empty() || vs.size() % 2 != 0) return false;
    const std::vector<u64> maskD = vertex_mask(*g, p->rest);
    std::map<std::vector<u64>, int> groups;
    for (int x : vs) {
      std::vector<u64> fp(maskD.size());
      const auto row = g->row_words(x);
      for (std::size_t wi = 0; wi < fp.size(); ++wi) {
        fp[wi] = row[wi] & maskD[wi];
      }
      ++groups[fp];
    }
    for (const auto& [fp, cnt] : groups) {
      int bits = 0;
      for (u64 word : fp) bits += std::popcount(word);
      if (bits == 4 && cnt == static_cast<int>(vs.size()) / 2) return true;
    }
    return false;
  }

  // A four-set of pool dominates oddCell while its complement within pool
  // dominates evenCell.
  bool dominated_pair(const std::vector<int>& pool,
                      const std::vector<int>* oddCell,
                      const std::vector<int>* evenCell) const {
    if (oddCell == nullptr || evenCell == nullptr) return false;
    const std::vector<u64> maskOdd = vertex_mask(*g, *oddCell);
    const std::vector<u64> maskEven = vertex_mask(*g, *evenCell);
    std::set<int> sOdd, sEven;
    for (int d : pool) {
      if (adjacent_to_all(*g, d, maskOdd)) sOdd.insert(d);
      if (adjacent_to_all(*g, d, maskEven)) sEven.insert(d);
    }
    if (sOdd.size() != 4) return false;
    std::set<int> complement(pool.begin(), pool.end());
    for (int d : sOdd) complement.erase(d);
    return sEven == complement;
  }
};

}  // namespace

ConditionReport recognize_quadruple_partition(const LoopGraph& g,
                                              const SwitchingPartition& p) {
  if (g.vertex_count() % 4 != 0) {
    throw std::invalid_argument(
        "recognize_quadruple_partition: vertex count not divisible by 4");
  }
  check_is_partition(g, p, "recognize_quadruple_partition");
  const int n = g.vertex_count() / 4;
  const RecognizerContext ctx{&g, &p};
  ConditionReport report;
  const auto add = [&report](std::string name, bool ok) {
    report.conditions.emplace_back(std::move(name), ok);
  };

  const int t = static_cast<int>(p.cells.size());
  add("at least 9 sets", t + 1 >= 9);
  add("|D| = 8", static_cast<int>(p.rest.size()) == 8);
  {
    const std::vector<int>* c1 = ctx.cell(1);
    add("|C1| = n/2", c1 != nullptr && static_cast<int>(c1->size()) == n / 2);
  }
  {
    bool ok = t >= 8;
    for (int i = 3; ok && i <= 8; ++i) {
      ok = static_cast<int>(ctx.cell(i)->size()) == n / 4;
    }
    add("|C3|..|C8| = n/4", ok);
  }
  {
    bool ok = t >= 8;
    if (ok) {
      int total = static_cast<int>(ctx.cell(2)->size());
      for (int i = 9; i <= t; ++i) {
        total += static_cast<int>(ctx.cell(i)->size());
      }
      ok = total == 2 * (n - 4);
    }
    add("|C2| + later cells = 2(n-4) (inferred size)", ok);
  }
  add("D all looped", ctx.all_loops(p.rest, true));
  add("every D vertex has a no-common-neighbour partner in D",
      ctx.paired(p.rest, false));
  {
    bool ok = t >= 8;
    for (int i = 1; ok && i <= t; ++i) {
      const bool looped = i == 2 || i > 8;
      ok = ctx.all_loops(*ctx.cell(i), looped);
    }
    add("C1, C3..C8 loopless; C2 and later cells looped", ok);
  }
  {
    const std::vector<int>* c1 = ctx.cell(1);
    add("half of C1 adjacent to the same four D vertices",
        c1 != nullptr && ctx.half_same_four(*c1));
    add("every C1 vertex has a no-common-neighbour partner in C1",
        c1 != nullptr && !c1->empty() && ctx.paired(*c1, false));
  }
  for (int k = 0; k < 3; ++k) {
    const int odd = 3 + 2 * k;
    add("C" + std::to_string(odd) + "/C" + std::to_string(odd + 1) +
            " dominated by a D four-set and its complement",
        ctx.dominated_pair(p.rest, ctx.cell(odd), ctx.cell(odd + 1)));
  }
  return report;
}

ConditionReport recognize_hall_partition(const LoopGraph& g,
                                         const SwitchingPartition& p) {
  if (g.vertex_count() % 4 != 0) {
    throw std::invalid_argument(
        "recognize_hall_partition: vertex count not divisible by 4");
  }
  check_is_partition(g, p, "recognize_hall_partition");
  const int n = g.vertex_count() / 4;
  const RecognizerContext ctx{&g, &p};
  ConditionReport report;
  const auto add = [&report](std::string name, bool ok) {
    report.conditions.emplace_back(std::move(name), ok);
  };

  const int t = static_cast<int>(p.cells.size());
  add("exactly 15 sets", t + 1 == 15);
  add("|D| = 16", static_cast<int>(p.rest.size()) == 16);
  {
    const std::vector<int>* c1 = ctx.cell(1);
    const std::vector<int>* c2 = ctx.cell(2);
    add("|C1| = |C2| = n/2 - 2",
        c1 != nullptr && c2 != nullptr &&
            static_cast<int>(c1->size()) == n / 2 - 2 &&
            static_cast<int>(c2->size()) == n / 2 - 2);
  }
  {
    bool ok = t >= 14;
    for (int i = 3; ok && i <= 14; ++i) {
      ok = static_cast<int>(ctx.cell(i)->size()) == n / 4 - 1;
    }
    add("|C3|..|C14| = n/4 - 1", ok);
  }

  std::vector<int> looped, loopless;
  for (int d : p.rest) (g.has_loop(d) ? looped : loopless).push_back(d);
  add("D has eight looped and eight loopless vertices",
      looped.size() == 8 && loopless.size() == 8);
  add("every D vertex has a same-loop-status no-common-neighbour partner in D",
      !p.rest.empty() && ctx.paired(p.rest, true));

  {
    const std::vector<int>* c1 = ctx.cell(1);
    const std::vector<int>* c2 = ctx.cell(2);
    add("C1 all looped, C2 all loopless",
        c1 != nullptr && c2 != nullptr && ctx.all_loops(*c1, true) &&
            ctx.all_loops(*c2, false));
    add("every C1 vertex has a no-common-neighbour partner in C1",
        c1 != nullptr && !c1->empty() && ctx.paired(*c1, false));
    add("half of C1 adjacent to the same four D vertices",
        c1 != nullptr && ctx.half_same_four(*c1));
    add("every C2 vertex has a no-common-neighbour partner in C2",
        c2 != nullptr && !c2->empty() && ctx.paired(*c2, false));
    add("half of C2 adjacent to the same four D vertices",
        c2 != nullptr && ctx.half_same_four(*c2));
  }
  {
    // Row cells carry loops, column cells do not: the construction places
    // rows at C3,C4,C7,C8,C11,C12 and columns at C5,C6,C9,C10,C13,C14.
    bool ok = t >= 14;
    for (int i = 3; ok && i <= 14; ++i) {
      const int r = (i - 3) % 4;
      const bool rowCell = r == 0 || r == 1;
      ok = ctx.all_loops(*ctx.cell(i), rowCell);
    }
    add("C3,C4,C7,C8,C11,C12 looped; C5,C6,C9,C10,C13,C14 loopless", ok);
  }
  for (int k = 0; k < 6; ++k) {
    const int odd = 3 + 2 * k;
    const int r = (odd - 3) % 4;
    const bool rowPair = r == 0;
    const std::vector<int>& pool = rowPair ? loopless : looped;
    add("C" + std::to_string(odd) + "/C" + std::to_string(odd + 1) +
            " dominated by a " + (rowPair ? "loopless" : "looped") +
            "-D four-set and its complement",
        pool.size() == 8 &&
            ctx.dominated_pair(pool, ctx.cell(odd), ctx.cell(odd + 1)));
  }
  return report;
}

}  // namespace hadsw

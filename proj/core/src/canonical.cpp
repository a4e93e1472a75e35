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

#include "hadsw/canonical.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "hadsw/char_poly.h"

namespace hadsw {
namespace {

using u64 = std::uint64_t;

// Individualization-refinement search. Every tree node carries a trace of
// how refinement split its cells; the trace is invariant under relabeling,
// so the pair (path trace, leaf encoding) orders leaves consistently across
// isomorphic inputs. The canonical labeling is the minimum such pair, and a
// branch whose partial trace already exceeds the best leaf's trace cannot
// contain it and is cut, aborting its refinement mid-cascade. Discovered
// automorphisms additionally collapse sibling branches into orbits.
struct Searcher {
  int n = 0;
  int words = 0;
  std::vector<u64> adj;    // n rows, diagonal cleared
  std::vector<char> loop;  // initial coloring
  std::uint64_t budget = 0;
  std::uint64_t used = 0;

  bool haveFirst = false;
  std::vector<u64> firstEnc;
  std::vector<int> firstLab;
  bool haveBest = false;
  std::vector<int> bestTrace;
  std::vector<u64> bestEnc;
  std::vector<int> bestLab;
  std::vector<std::vector<int>> autos;

  std::vector<int> pathTrace;

  // Relation of pathTrace to bestTrace over the compared prefix: 0 while
  // equal, -1 once pathTrace is lexicographically below (or no best exists
  // yet), +1 once above. Only the 0 state compares further elements.
  int cmpRel = -1;
  std::size_t cmpPos = 0;
  std::uint64_t bestGen = 0;

  void consume(std::uint64_t k) {
    used += k;
    if (used > budget) {
      throw BudgetExhausted("canonical_form: budget of " +
                            std::to_string(budget) +
                            " refinement steps exhausted");
    }
  }

  int count_in(int v, const std::vector<u64>& mask) const {
    int c = 0;
    const u64* row = adj.data() + static_cast<std::size_t>(v) * words;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
    return c;
  }

  // Appends one trace element, advancing the comparison against bestTrace.
  // Returns false once the trace has risen above it; an equal prefix that
  // runs past bestTrace's end also counts as above, since the best leaf's
  // own continuation ended sooner.
  bool trace_push(std::vector<int>* trace, int v) {
    trace->push_back(v);
    if (cmpRel != 0) return true;
    if (cmpPos >= bestTrace.size() || v > bestTrace[cmpPos]) {
      cmpRel = 1;
      return false;
    }
    if (v < bestTrace[cmpPos]) {
      cmpRel = -1;
      return true;
    }
    ++cmpPos;
    return true;
  }

  bool refine(std::vector<std::vector<int>>* cells,
              std::deque<std::vector<int>> queue, std::vector<int>* trace);
  std::vector<u64> encode(const std::vector<int>& lab) const;
  void record_leaf(const std::vector<std::vector<int>>& cells);
  void search(const std::vector<std::vector<int>>& cells,
              const std::vector<int>& individualized);
};

// Refines to equitability against the queued splitter sets. Deterministic:
// cells are scanned in order, fragments replace their cell ordered by
// ascending neighbour count, and every fragment becomes a new splitter. The
// trace records each split as cell index, fragment count, and the fragment
// (count, size) pairs; isomorphic nodes produce identical traces. Returns
// false without finishing once the trace exceeds the best leaf's.
bool Searcher::refine(std::vector<std::vector<int>>* cells,
                      std::deque<std::vector<int>> queue,
                      std::vector<int>* trace) {
  std::vector<u64> mask(words);
  while (!queue.empty()) {
    const std::vector<int> splitter = std::move(queue.front());
    queue.pop_front();
    std::fill(mask.begin(), mask.end(), 0);
    for (int v : splitter) mask[v / 64] |= u64{1} << (v % 64);

    for (std::size_t ci = 0; ci < cells->size(); ++ci) {
      if ((*cells)[ci].size() < 2) continue;
      consume((*cells)[ci].size());
      std::map<int, std::vector<int>> byCount;
      for (int v : (*cells)[ci]) byCount[count_in(v, mask)].push_back(v);
      if (byCount.size() < 2) continue;

      bool ok = trace_push(trace, static_cast<int>(ci));
      ok = ok && trace_push(trace, static_cast<int>(byCount.size()));
      std::vector<std::vector<int>> fragments;
      for (auto& [cnt, verts] : byCount) {
        ok = ok && trace_push(trace, cnt);
        ok = ok && trace_push(trace, static_cast<int>(verts.size()));
        fragments.push_back(std::move(verts));
      }
      if (!ok) return false;
      (*cells)[ci] = fragments[0];
      for (std::size_t f = 1; f < fragments.size(); ++f) {
        cells->insert(cells->begin() + ci + f, fragments[f]);
      }
      for (std::vector<int>& frag : fragments) queue.push_back(std::move(frag));
    }
  }
  return true;
}

std::vector<u64> Searcher::encode(const std::vector<int>& lab) const {
  // Packed relabeled adjacency, diagonal bits carrying the loops.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  std::vector<u64> enc(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    const int old = lab[i];
    const u64* row = adj.data() + static_cast<std::size_t>(old) * words;
    u64* out = enc.data() + static_cast<std::size_t>(i) * words;
    for (int w = 0; w < words; ++w) {
      u64 bitsw = row[w];
      while (bitsw) {
        const int b = std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        const int nj = pos[w * 64 + b];
        out[nj / 64] |= u64{1} << (nj % 64);
      }
    }
    if (loop[old]) out[i / 64] |= u64{1} << (i % 64);
  }
  return enc;
}

void Searcher::record_leaf(const std::vector<std::vector<int>>& cells) {
  std::vector<int> lab(n);
  for (int i = 0; i < n; ++i) lab[i] = cells[i][0];
  const std::vector<u64> enc = encode(lab);

  // Equal encodings of two leaves always witness an automorphism, wherever
  // the leaves sit in the tree.
  const auto add_automorphism = [&](const std::vector<int>& otherLab) {
    std::vector<int> gamma(n);
    for (int i = 0; i < n; ++i) gamma[otherLab[i]] = lab[i];
    bool identity = true;
    for (int v = 0; v < n; ++v) identity = identity && gamma[v] == v;
    if (!identity) autos.push_back(std::move(gamma));
  };

  if (!haveFirst) {
    haveFirst = true;
    firstEnc = enc;
    firstLab = lab;
  } else if (enc == firstEnc) {
    add_automorphism(firstLab);
  }

  if (!haveBest || pathTrace < bestTrace ||
      (pathTrace == bestTrace && enc < bestEnc)) {
    haveBest = true;
    bestTrace = pathTrace;
    bestEnc = enc;
    bestLab = lab;
    ++bestGen;
  } else if (pathTrace == bestTrace && enc == bestEnc && enc != firstEnc) {
    add_automorphism(bestLab);
  }
}

void Searcher::search(const std::vector<std::vector<int>>& cells,
                      const std::vector<int>& individualized) {
  int target = -1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1 &&
        (target < 0 || cells[i].size() < cells[target].size())) {
      target = static_cast<int>(i);
    }
  }
  if (target < 0) {
    record_leaf(cells);
    return;
  }

  std::vector<int> branches = cells[target];
  std::sort(branches.begin(), branches.end());
  std::vector<char> done(n, 0);
  // The trace comparison state at this node; refreshed after any descendant
  // replaces the best leaf, whose trace then extends this node's.
  const std::size_t baseLen = pathTrace.size();
  int baseRel = cmpRel;
  std::size_t basePos = cmpPos;
  for (std::size_t bi = 0; bi < branches.size(); ++bi) {
    const int x = branches[bi];
    if (done[x]) continue;

    // Orbit pruning: skip later branch vertices that an automorphism fixing
    // the individualized prefix maps this one to.
    if (bi + 1 < branches.size() && !autos.empty()) {
      std::vector<int> parent(n);
      for (int v = 0; v < n; ++v) parent[v] = v;
      const auto find = [&parent](int v) {
        while (parent[v] != v) {
          parent[v] = parent[parent[v]];
          v = parent[v];
        }
        return v;
      };
      for (const std::vector<int>& gamma : autos) {
        bool fixes = true;
        for (int v : individualized) fixes = fixes && gamma[v] == v;
        if (!fixes) continue;
        for (int v = 0; v < n; ++v) {
          const int a = find(v), b = find(gamma[v]);
          if (a != b) parent[a] = b;
        }
      }
      for (std::size_t bj = bi + 1; bj < branches.size(); ++bj) {
        if (find(branches[bj]) == find(x)) done[branches[bj]] = 1;
      }
    }

    std::vector<std::vector<int>> child = cells;
    std::vector<int> remainder = child[target];
    remainder.erase(std::find(remainder.begin(), remainder.end(), x));
    child[target] = {x};
    child.insert(child.begin() + target + 1, remainder);
    std::deque<std::vector<int>> queue;
    queue.push_back({x});
    queue.push_back(std::move(remainder));

    cmpRel = baseRel;
    cmpPos = basePos;
    const std::uint64_t genBefore = bestGen;
    // A branch whose trace rises above the best leaf's cannot contain the
    // minimum; one that falls below it will replace the best at its first
    // leaf. The boundary element makes deeper paths compare longer.
    bool viable = trace_push(&pathTrace, -1);
    viable = viable && refine(&child, std::move(queue), &pathTrace);
    if (viable) {
      std::vector<int> childIndiv = individualized;
      childIndiv.push_back(x);
      search(child, childIndiv);
    }
    pathTrace.resize(baseLen);
    if (bestGen != genBefore) {
      baseRel = 0;
      basePos = baseLen;
    }
  }
}

}  // namespace

CanonicalForm canonical_form(const LoopGraph& g, std::uint64_t budget) {
  const int n = g.vertex_count();
  CanonicalForm out;
  if (n == 0) {
    out.canonicalGraph = g;
    return out;
  }

  Searcher s;
  s.n = n;
  s.words = (n + 63) / 64;
  s.budget = budget;
  s.adj.assign(static_cast<std::size_t>(n) * s.words, 0);
  s.loop.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto row = g.row_words(v);
    u64* dst = s.adj.data() + static_cast<std::size_t>(v) * s.words;
    for (int w = 0; w < g.words_per_row(); ++w) dst[w] = row[w];
    dst[v / 64] &= ~(u64{1} << (v % 64));
    s.loop[v] = g.has_loop(v) ? 1 : 0;
  }

  std::vector<std::vector<int>> cells;
  std::vector<int> loopless, looped;
  for (int v = 0; v < n; ++v) (s.loop[v] ? looped : loopless).push_back(v);
  if (!loopless.empty()) cells.push_back(std::move(loopless));
  if (!looped.empty()) cells.push_back(std::move(looped));
  {
    std::deque<std::vector<int>> queue(cells.begin(), cells.end());
    s.refine(&cells, std::move(queue), &s.pathTrace);
  }
  s.search(cells, {});

  out.canonicalGraph = relabel(g, s.bestLab);
  out.labeling = std::move(s.bestLab);
  out.automorphisms = std::move(s.autos);
  out.budgetUsed = s.used;
  if (out.canonicalGraph == g) {
    for (int i = 0; i < n; ++i) out.labeling[i] = i;
  }
  return out;
}

bool isomorphic(const LoopGraph& a, const LoopGraph& b, std::uint64_t budget) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.loop_count() != b.loop_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (char_poly(a) != char_poly(b)) return false;
  return canonical_form(a, budget).canonicalGraph ==
         canonical_form(b, budget).canonicalGraph;
}

}  // namespace hadsw

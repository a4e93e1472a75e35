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

#include <benchmark/benchmark.h>

#include "hadsw/canonical.h"
#include "hadsw/char_poly.h"
#include "hadsw/corpus.h"
#include "hadsw/equivalence.h"
#include "hadsw/gm_switch.h"
#include "hadsw/had_graph.h"
#include "hadsw/had_switch.h"
#include "hadsw/invariants.h"
#include "hadsw/sign_matrix.h"

namespace {

using hadsw::corpus_matrix;

void BM_FindClosedQuadruples(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H16.0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::find_closed_quadruples(m));
  }
}
BENCHMARK(BM_FindClosedQuadruples);

void BM_FindHallSets(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::find_hall_sets(m));
  }
}
BENCHMARK(BM_FindHallSets);

void BM_HadamardGraph(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H36");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::hadamard_graph(m));
  }
}
BENCHMARK(BM_HadamardGraph);

void BM_GmSwitch(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H16.0");
  const auto q = hadsw::find_closed_quadruples(m).front();
  const hadsw::LoopGraph g = hadsw::hadamard_graph(m);
  const auto p = hadsw::quadruple_partition(m, q, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::gm_switch(g, p));
  }
}
BENCHMARK(BM_GmSwitch);

void BM_CharPoly(benchmark::State& state) {
  const hadsw::LoopGraph g = hadsw::hadamard_graph(corpus_matrix("H20.0"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::char_poly(g));
  }
}
BENCHMARK(BM_CharPoly);

void BM_SnfDiagonal(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H20.0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::snf_diagonal(m));
  }
}
BENCHMARK(BM_SnfDiagonal);

void BM_Profile4(benchmark::State& state) {
  const hadsw::SignMatrix m = corpus_matrix("H20.0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::profile4(m));
  }
}
BENCHMARK(BM_Profile4);

void BM_CanonicalForm(benchmark::State& state) {
  const hadsw::LoopGraph g = hadsw::hadamard_graph(corpus_matrix("H12"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_Equivalent(benchmark::State& state) {
  const hadsw::SignMatrix a = corpus_matrix("H12");
  const hadsw::SignMatrix b = corpus_matrix("H12'");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadsw::equivalent(a, b));
  }
}
BENCHMARK(BM_Equivalent);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The Polynorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial reference counterparts.

#include <benchmark/benchmark.h>

#include "polynorm/corpus.hpp"
#include "polynorm/normality.hpp"
#include "polynorm/polytope.hpp"
#include "polynorm/reference.hpp"
#include "polynorm/syzygy.hpp"

namespace polynorm {
namespace {

Polytope sample_polytope(int n) {
  CorpusSpec spec;
  spec.seed = 12345;
  spec.dims = {n};
  spec.coord_bound = 4;
  spec.count_per_dim = 1;
  spec.vertex_candidates = n + 2;
  return generate_corpus(spec).front();
}

void BM_LatticePoints_Kernel(benchmark::State& state) {
  const Polytope p = dilate(sample_polytope(static_cast<int>(state.range(0))), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p, Containment::Closed));
}
BENCHMARK(BM_LatticePoints_Kernel)->Args({3, 4})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_LatticePoints_BoxScan(benchmark::State& state) {
  const Polytope p = dilate(sample_polytope(static_cast<int>(state.range(0))), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::lattice_points_box_scan(p, Containment::Closed));
}
BENCHMARK(BM_LatticePoints_BoxScan)->Args({3, 4})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_NormalAtLevel_Decomposition(benchmark::State& state) {
  const Polytope p = dilate(sample_polytope(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_normal_at_level(p, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_NormalAtLevel_Decomposition)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_NormalAtLevel_Sumset(benchmark::State& state) {
  const Polytope p = dilate(sample_polytope(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::is_normal_at_level_sumset(p, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_NormalAtLevel_Sumset)->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_N1Probe_Lifted(benchmark::State& state) {
  const auto config = build_configuration(sample_polytope(2), 2);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n1_probe(config, 2, cap));
}
BENCHMARK(BM_N1Probe_Lifted)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_N1Probe_Explicit(benchmark::State& state) {
  const auto config = build_configuration(sample_polytope(2), 2);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::n1_probe_explicit(config, 2, cap));
}
BENCHMARK(BM_N1Probe_Explicit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace polynorm

BENCHMARK_MAIN();

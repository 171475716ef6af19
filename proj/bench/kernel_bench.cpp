// Copyright 2026 The skewgal Authors
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

// Serial reference against the OpenMP path for each verification kernel.
// The second benchmark argument selects the path: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "skewgal/ffield.hpp"
#include "skewgal/group_catalog.hpp"
#include "skewgal/kernels.hpp"

using namespace skewgal;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_TableAssociative(benchmark::State& st) {
  auto G = grp::catalog_group("C3:D8");
  for (auto _ : st) benchmark::DoNotOptimize(kernels::table_associative(G->flat_table(), G->order(), exec_of(st)));
}

void BM_OreRingLaws(benchmark::State& st) {
  auto L = ff::FqField::make(2, 4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ore_ring_laws(L, 1, 2000, 1, 4, exec_of(st)));
}

void BM_OreDivision(benchmark::State& st) {
  auto L = ff::FqField::make(3, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ore_division_sweep(L, 1, 2000, 1, 6, exec_of(st)));
}

void BM_OreWitness(benchmark::State& st) {
  auto L = ff::FqField::make(5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ore_witness_sweep(L, 1, 500, 1, 4, exec_of(st)));
}

void BM_CriteriaSweep(benchmark::State& st) {
  auto inst = kernels::aut_instances(2, 4096);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::criteria_sweep(inst, exec_of(st)));
}

void BM_LiftSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::lift_sweep(3, 6561, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_TableAssociative)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OreRingLaws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OreDivision)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OreWitness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriteriaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Copyright 2026 The pingpong-sim Authors
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


// Compares the OpenMP session kernel with the serial reference.

#include <benchmark/benchmark.h>

#include "pingpong/analysis.h"
#include "pingpong/protocol.h"

namespace {

using namespace pingpong;

ProtocolConfig bench_config(int64_t rounds) {
    ProtocolConfig c;
    c.attack = {AttackKind::Improved, true};
    c.two_basis_control = true;
    c.rounds = static_cast<uint64_t>(rounds);
    return c;
}

void BM_SessionSerial(benchmark::State &state) {
    const ProtocolConfig c = bench_config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_session_serial(c, {0.8}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SessionSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SessionParallel(benchmark::State &state) {
    const ProtocolConfig c = bench_config(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_session(c, {0.8}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SessionParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Sweep(benchmark::State &state) {
    const auto grid = eta_grid(0.0, 1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(grid));
}
BENCHMARK(BM_Sweep)->Arg(101)->Arg(10001);

}  // namespace

BENCHMARK_MAIN();

/*
 * Copyright 2026 The bunloc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "bunloc/bundles.hpp"

using namespace bunloc::fq;

static void census_serial(benchmark::State& state) {
    FqConfig F(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (int d = 0; d <= 4; ++d) {
            auto counts = orbit_census_serial(d, F);
            benchmark::DoNotOptimize(counts);
        }
    }
}
BENCHMARK(census_serial)->Arg(2)->Arg(3)->Arg(5);

static void census_parallel(benchmark::State& state) {
    FqConfig F(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (int d = 0; d <= 4; ++d) {
            auto counts = orbit_census(d, F);
            benchmark::DoNotOptimize(counts);
        }
    }
}
BENCHMARK(census_parallel)->Arg(2)->Arg(3)->Arg(5);

static void hecke_fibers(benchmark::State& state) {
    FqConfig F(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (auto& label : labels_at_gap(0)) {
            auto counts = hecke_fiber_counts(label, 2, F);
            benchmark::DoNotOptimize(counts);
        }
    }
}
BENCHMARK(hecke_fibers)->Arg(3)->Arg(5);

BENCHMARK_MAIN();

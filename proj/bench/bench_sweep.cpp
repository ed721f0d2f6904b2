// SPDX-License-Identifier: Apache-2.0
//
// mbsat: return-link capacity of clustered multibeam satellite systems
// Copyright (C) 2026 mbsat contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Serial reference vs OpenMP sweep on a reduced configuration.

#include "mbsat/harness.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace
{
    mbsat::RunConfig small_config(int iterations)
    {
        mbsat::RunConfig cfg;
        cfg.iterations = iterations;
        cfg.gamma_min_db = 0.0;
        cfg.gamma_max_db = 40.0;
        cfg.gamma_step_db = 10.0;
        return cfg;
    }

    void BM_SweepSerial(benchmark::State &state)
    {
        const auto cfg = small_config(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(mbsat::run_sweep_serial(cfg));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    void BM_SweepParallel(benchmark::State &state)
    {
        const auto cfg = small_config(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(mbsat::run_sweep(cfg, omp_get_max_threads()));
        state.SetItemsProcessed(state.iterations() * state.range(0));
        state.counters["threads"] = omp_get_max_threads();
    }

    void BM_EvaluateIteration(benchmark::State &state)
    {
        const auto cfg = small_config(1);
        const mbsat::SweepContext ctx(cfg);
        std::size_t it = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(mbsat::evaluate_iteration(ctx, it++));
    }
}

BENCHMARK(BM_SweepSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateIteration)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

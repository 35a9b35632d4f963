// Copyright 2026 The tripleunc Authors
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

#include <benchmark/benchmark.h>

#include "tripleunc/tripleunc.hpp"

using namespace tripleunc;

static void BM_eig_hermitian(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto h = random_hermitian(SampleConfig{1, d, {}, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_eig_hermitian)->RangeMultiplier(2)->Range(2, 64);

static void BM_build_r_and_expansion(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto t = random_hermitian_triple(SampleConfig{2, d, {}, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_r(t));
        benchmark::DoNotOptimize(r_squared_expansion(t));
    }
}
BENCHMARK(BM_build_r_and_expansion)->RangeMultiplier(2)->Range(2, 32);

static void BM_audit_triple(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto t = random_hermitian_triple(SampleConfig{3, d, {}, 1.0});
    const auto rho = ginibre_density(SampleConfig{4, d, {}, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(audit_triple(t, rho));
}
BENCHMARK(BM_audit_triple)->RangeMultiplier(2)->Range(2, 32);

static void BM_expectation_witness(benchmark::State &state) {
    const auto t = random_involutive_triple(SampleConfig{5, 2, {}, 1.0});
    const auto rho = random_separable(SampleConfig{6, 2, {}, 1.0}, 5);
    for (auto _ : state) benchmark::DoNotOptimize(expectation_witness(t, rho));
}
BENCHMARK(BM_expectation_witness);

static void BM_estimate_variance_floor(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto t = random_hermitian_triple(SampleConfig{7, d, {}, 1.0});
    FloorConfig cfg;
    cfg.restarts = 8;
    for (auto _ : state) benchmark::DoNotOptimize(estimate_variance_floor(t, cfg));
}
BENCHMARK(BM_estimate_variance_floor)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_bloch_grid_minimum(benchmark::State &state) {
    const auto t = random_hermitian_triple(SampleConfig{8, 2, {}, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(bloch_grid_minimum(t, std::numbers::pi / 60.0));
}
BENCHMARK(BM_bloch_grid_minimum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

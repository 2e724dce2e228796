// Copyright 2026 The dqc1k Authors
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

#include <random>

#include "dqc1/engine.h"
#include "dqc1/gadgets.h"
#include "dqc1/random.h"
#include "dqc1/state.h"

using namespace dqc1;

namespace {

std::vector<Qubit> register_wires(std::size_t n) {
    std::vector<Qubit> out;
    for (Qubit q = 1; q <= n; q++) {
        out.push_back(q);
    }
    return out;
}

void BM_pure_h_layer(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PureState psi(n);
    for (auto _ : state) {
        for (Qubit q = 0; q < n; q++) {
            psi.apply_unchecked(gates::h(q));
        }
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_pure_h_layer)->DenseRange(10, 22, 4);

void BM_pure_mcx(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PureState psi(n);
    std::vector<Qubit> controls = register_wires(n - 1);
    const Gate g = gates::mcx(controls, std::vector<std::uint8_t>(controls.size(), 0), 0);
    for (auto _ : state) {
        psi.apply_unchecked(g);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
}
BENCHMARK(BM_pure_mcx)->DenseRange(10, 22, 4);

void BM_density_w_gadget(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Dqc1Circuit c;
    c.circuit = {n + 1, build_W(GraphSpec::linear(n), 0, register_wires(n))};
    c.measured = {0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_distribution(c, {}, ExactMethod::Density));
    }
}
BENCHMARK(BM_density_w_gadget)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_mixture_random_circuit(benchmark::State &state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    Dqc1Circuit c;
    c.circuit = random_circuit(m, 4 * m, rng, {.allow_matrices = true, .allow_mcx = true, .allow_graph_proj = false});
    c.measured = {0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_distribution(c, {}, ExactMethod::Mixture));
    }
}
BENCHMARK(BM_mixture_random_circuit)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_sample_trace_circuit(benchmark::State &state) {
    const auto shots = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    const Circuit u = random_circuit(6, 24, rng);
    const Dqc1Circuit c = build_trace_circuit(u, TracePart::Real);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(c, shots, 7));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * shots));
}
BENCHMARK(BM_sample_trace_circuit)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_compile_three(benchmark::State &state) {
    const std::vector<double> angles(static_cast<std::size_t>(state.range(0)), 0.3);
    const auto pattern = pattern_from_rotations(angles);
    for (auto _ : state) {
        const auto r = compile_three(pattern);
        benchmark::DoNotOptimize(conditional_distribution(r.circuit, r.postselect));
    }
}
BENCHMARK(BM_compile_three)->DenseRange(1, 5, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

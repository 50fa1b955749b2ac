// Copyright 2026 The AHL Simulator Authors
//
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
#include "ahl/circuit.hpp"
#include "ahl/experiments.hpp"
#include "ahl/gates.hpp"
#include "ahl/hamiltonian.hpp"
#include "ahl/noise.hpp"
#include "ahl/training.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ahl;

DensityMatrix mixed_state(std::size_t n) {
    DensityMatrix rho = DensityMatrix::maximally_mixed(n);
    for (std::size_t q = 0; q < n; ++q) {
        rho = apply_gate(rho, Gate::ry(q, 0.3 + 0.1 * static_cast<double>(q)));
    }
    return rho;
}

void BM_ApplyRotation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto rho = mixed_state(n);
    const Gate g = Gate::rx(n / 2, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_gate(rho, g));
    }
}
BENCHMARK(BM_ApplyRotation)->DenseRange(2, 8, 2);

void BM_ApplyCnot(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto rho = mixed_state(n);
    const Gate g = Gate::cnot(0, n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_gate(rho, g));
    }
}
BENCHMARK(BM_ApplyCnot)->DenseRange(2, 8, 2);

void BM_AmplitudeDamping(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto rho = mixed_state(n);
    const auto ch = amplitude_damping(0.05, n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_channel(rho, ch));
    }
}
BENCHMARK(BM_AmplitudeDamping)->DenseRange(2, 8, 2);

void BM_Expm(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = build_h_p(LatticeSpec::chain(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponential(h, 0.7));
    }
}
BENCHMARK(BM_Expm)->DenseRange(2, 6, 2);

void BM_GroundEnergy(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = build_h_p(LatticeSpec::chain(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ground_energy(h));
    }
}
BENCHMARK(BM_GroundEnergy)->DenseRange(2, 6, 2);

void BM_BatchPredict(benchmark::State &state) {
    ExperimentConfig cfg;
    cfg.depth = static_cast<std::size_t>(state.range(0));
    const auto circuit = build_model(cfg);
    const auto data = make_dataset(cfg);
    std::vector<std::vector<double>> inputs;
    for (const auto &x : data.train_inputs()) {
        inputs.push_back(encode_features(cfg.task, x, cfg.n_qubits));
    }
    const BatchPredictor batch(circuit, inputs);
    const auto params = random_params(circuit.layout(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(batch.predict(params));
    }
}
BENCHMARK(BM_BatchPredict)->Arg(2)->Arg(10);

void BM_TrainEpoch(benchmark::State &state) {
    ExperimentConfig cfg;
    cfg.depth = static_cast<std::size_t>(state.range(0));
    cfg.epochs = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(cfg, false));
    }
}
BENCHMARK(BM_TrainEpoch)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

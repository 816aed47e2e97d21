// Copyright 2026 The bewit Authors
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


#include <random>

#include "benchmark/benchmark.h"

#include "bewit/bewit.hpp"

namespace {

using namespace bewit;
using K = StateId::Kind;

DensityMatrix random_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ComplexMatrix m(16, 16);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(g(rng), g(rng));
    const ComplexMatrix rho = m * m.adjoint();
    return DensityMatrix(rho / rho.trace().real(), 4, 4);
}

void BM_HermitianEig16(benchmark::State& state) {
    const ComplexMatrix m = random_state(1).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig16);

void BM_Negativity(benchmark::State& state) {
    const DensityMatrix rho = random_state(2);
    for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_Ccnr(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const DensityMatrix rho = isotropic_mix(catalog({K::BPD}), 0.7, dim);
    for (auto _ : state) benchmark::DoNotOptimize(ccnr(rho));
}
BENCHMARK(BM_Ccnr)->Arg(4)->Arg(6)->Arg(8);

void BM_MaxQfi(benchmark::State& state) {
    const DensityMatrix rho = catalog({K::R6});
    for (auto _ : state) benchmark::DoNotOptimize(max_qfi(rho));
}
BENCHMARK(BM_MaxQfi);

void BM_EntangledValue(benchmark::State& state) {
    const DensityMatrix rho = random_state(3);
    const WitnessCoefficients w = witness_for_state(rho, Permutation());
    for (auto _ : state) benchmark::DoNotOptimize(entangled_value(rho, w));
}
BENCHMARK(BM_EntangledValue)->Unit(benchmark::kMillisecond);

void BM_SeeSawRestart(benchmark::State& state) {
    SeeSawOptions o;
    o.classical = state.range(0) != 0;
    o.max_iter = 500;
    const WitnessCoefficients w = canonical_coefficients();
    int restart = 0;
    for (auto _ : state) benchmark::DoNotOptimize(seesaw_restart(w, o, restart++));
}
BENCHMARK(BM_SeeSawRestart)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

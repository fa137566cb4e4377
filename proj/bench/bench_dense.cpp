// Copyright 2026 The gcliff Authors
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

// Serial reference kernels against their OpenMP versions on registers of
// 2^10 to 2^20 amplitudes.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gcliff/kernels.hpp"

using namespace gcliff;

namespace {

std::vector<cplx> random_vector(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<cplx> v(n);
    for (cplx &x : v) {
        x = cplx(d(rng), d(rng));
    }
    return v;
}

// Two-qubit gate on slots (0, n-1) of n qubits.
template <bool Parallel>
void BM_LocalMatrix(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    const SlotLayout layout{2, n};
    std::vector<cplx> psi = random_vector(layout.dim(), 1);
    const std::vector<cplx> m = random_vector(16, 2);
    const std::vector<size_t> slots{0, n - 1};
    for (auto _ : state) {
        if constexpr (Parallel) {
            apply_local_matrix_parallel(psi, layout, slots, m);
        } else {
            apply_local_matrix_serial(psi, layout, slots, m);
        }
        benchmark::DoNotOptimize(psi.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * layout.dim()));
}

template <bool Parallel>
void BM_Monomial(benchmark::State &state) {
    const size_t dim = size_t{1} << state.range(0);
    const std::vector<cplx> psi = random_vector(dim, 3), phase = random_vector(dim, 4);
    std::vector<uint64_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(5));
    std::vector<cplx> out;
    for (auto _ : state) {
        if constexpr (Parallel) {
            apply_monomial_parallel(psi, out, perm, phase);
        } else {
            apply_monomial_serial(psi, out, perm, phase);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * dim));
}

}  // namespace

BENCHMARK(BM_LocalMatrix<false>)->Name("local_matrix/serial")->DenseRange(10, 20, 5)->UseRealTime();
BENCHMARK(BM_LocalMatrix<true>)->Name("local_matrix/parallel")->DenseRange(10, 20, 5)->UseRealTime();
BENCHMARK(BM_Monomial<false>)->Name("monomial/serial")->DenseRange(10, 20, 5)->UseRealTime();
BENCHMARK(BM_Monomial<true>)->Name("monomial/parallel")->DenseRange(10, 20, 5)->UseRealTime();

BENCHMARK_MAIN();

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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gcliff/kernels.hpp"

using namespace gcliff;

namespace {

std::vector<cplx> random_vector(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    std::vector<cplx> v(n);
    for (cplx &x : v) {
        x = cplx(d(rng), d(rng));
    }
    return v;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

TEST_CASE("layout strides put slot 0 first") {
    const SlotLayout l{3, 4};
    CHECK(l.dim() == 81);
    CHECK(l.stride(0) == 27);
    CHECK(l.stride(3) == 1);
}

TEST_CASE("parallel local matrix kernel matches the serial reference") {
    std::mt19937_64 rng(71);
    for (const auto &[dim, n] : std::vector<std::pair<uint64_t, size_t>>{{2, 10}, {3, 6}, {8, 4}, {4, 5}}) {
        const SlotLayout l{dim, n};
        for (size_t w = 1; w <= 2; w++) {
            for (int t = 0; t < 5; t++) {
                std::vector<size_t> slots(n);
                std::iota(slots.begin(), slots.end(), 0);
                std::shuffle(slots.begin(), slots.end(), rng);
                slots.resize(w);
                uint64_t ld = 1;
                for (size_t k = 0; k < w; k++) {
                    ld *= dim;
                }
                const std::vector<cplx> m = random_vector(ld * ld, rng);
                std::vector<cplx> a = random_vector(l.dim(), rng), b = a;
                apply_local_matrix_serial(a, l, slots, m);
                apply_local_matrix_parallel(b, l, slots, m);
                CHECK(max_diff(a, b) <= 1e-12);
            }
        }
    }
}

TEST_CASE("local matrix on one slot acts on that digit") {
    // X on slot 0 of two qubits maps index 0 (|00>) to index 2 (|10>).
    const SlotLayout l{2, 2};
    std::vector<cplx> psi{1, 0, 0, 0};
    apply_local_matrix_serial(psi, l, {0}, {0, 1, 1, 0});
    CHECK(psi[2] == cplx(1));
    // Slot order inside the matrix follows the slots argument.
    std::vector<cplx> cx{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    std::vector<cplx> s{0, 1, 0, 0};  // |01>
    apply_local_matrix_serial(s, l, {1, 0}, cx);
    CHECK(s[3] == cplx(1));
}

TEST_CASE("parallel monomial kernel matches the serial reference") {
    std::mt19937_64 rng(72);
    for (size_t n : {16u, 5000u, 70000u}) {
        std::vector<uint64_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const std::vector<cplx> phase = random_vector(n, rng), psi = random_vector(n, rng);
        std::vector<cplx> a, b;
        apply_monomial_serial(psi, a, perm, phase);
        apply_monomial_parallel(psi, b, perm, phase);
        CHECK(max_diff(a, b) == 0.0);
    }
}

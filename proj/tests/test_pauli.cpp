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

#include "gcliff/dense.hpp"
#include "gcliff/pauli.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

namespace {

PauliOperator random_pauli(const Group &g, std::mt19937_64 &rng) {
    const int64_t den = 2 * g.exponent();
    return PauliOperator(PhaseRational(static_cast<int64_t>(rng() % static_cast<uint64_t>(den)), den),
                         random_element(g, rng), Character(random_element(g, rng)));
}

const std::vector<std::vector<int64_t>> kGroups{{2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {4, 2}};

}  // namespace

TEST_CASE("Pauli products") {
    const Group z2 = make_group({2});
    const PauliOperator xz(PhaseRational(), GroupElement(z2, {1}), Character(z2, {1}));
    CHECK(pauli_pow(xz, 2) == PauliOperator(PhaseRational(1, 2), PauliVector::zero(z2)));
    const Group z4 = make_group({4});
    const PauliOperator z1 = PauliOperator::z_op(Character(z4, {1}));
    const PauliOperator x1 = PauliOperator::x_op(GroupElement(z4, {1}));
    CHECK(pauli_mul(z1, x1) == PauliOperator(PhaseRational(1, 4), GroupElement(z4, {1}), Character(z4, {1})));
    std::mt19937_64 rng(31);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 50; t++) {
            const PauliOperator p = random_pauli(g, rng);
            CHECK(pauli_mul(p, pauli_inverse(p)).is_identity());
            CHECK(pauli_pow(p, -1) == pauli_inverse(p));
            CHECK(pauli_pow(p, 0).is_identity());
            const PauliOperator q = random_pauli(g, rng), r = random_pauli(g, rng);
            CHECK(pauli_mul(pauli_mul(p, q), r) == pauli_mul(p, pauli_mul(q, r)));
        }
    }
}

TEST_CASE("Pauli matrices act as omega chi(h)|h+g>") {
    const Group g = make_group({4, 2});
    std::mt19937_64 rng(32);
    for (int t = 0; t < 20; t++) {
        const PauliOperator p = random_pauli(g, rng);
        const DenseMatrix m = dense_pauli(p);
        for (const GroupElement &h : enumerate_elements(g)) {
            const cplx expect = (p.phase + char_eval(p.z, h)).to_complex();
            CHECK(close(m.at(element_index(h + p.x), element_index(h)), expect, kGateTolerance));
        }
    }
}

TEST_CASE("commutation phase beta") {
    const Group z2 = make_group({2});
    const PauliVector xv(GroupElement(z2, {1}), Character::trivial(z2));
    const PauliVector zv(elem_zero(z2), Character(z2, {1}));
    CHECK(beta(xv, zv) == PhaseRational(1, 2));
    std::mt19937_64 rng(33);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 50; t++) {
            const PauliVector u = random_pauli(g, rng).vec(), v = random_pauli(g, rng).vec();
            CHECK(beta(u, u).is_zero());
            CHECK((beta(u, v) + beta(v, u)).is_zero());
            // pq = beta(p, q) qp, checked symbolically.
            const PauliOperator p(PhaseRational(), u), q(PhaseRational(), v);
            const PauliOperator pq = pauli_mul(p, q), qp = pauli_mul(q, p);
            CHECK(pq.vec() == qp.vec());
            CHECK(pq.phase == qp.phase + beta(u, v));
            const PauliVector w = random_pauli(g, rng).vec();
            CHECK(beta(vec_add(u, w), v) == beta(u, v) + beta(w, v));
        }
    }
}

TEST_CASE("vector order and doubled coordinates") {
    const Group g = make_group({4, 2});
    const PauliVector v(GroupElement(g, {2, 0}), Character(g, {0, 1}));
    CHECK(vec_order(v) == 2);
    CHECK(vec_order(PauliVector::zero(g)) == 1);
    CHECK(doubled_group(g) == make_group({4, 2, 4, 2}));
    CHECK(element_to_vec(g, vec_to_element(v)) == v);
    CHECK(vec_to_element(v).residues() == std::vector<int64_t>{2, 0, 0, 1});
}

TEST_CASE("embedding into several copies") {
    const Group z2 = make_group({2});
    CHECK(embed(PauliOperator::identity(z2), 0, 3).is_identity());
    std::mt19937_64 rng(34);
    const Group g = make_group({2, 4});
    for (int t = 0; t < 20; t++) {
        const PauliOperator p = random_pauli(g, rng);
        for (size_t slot = 0; slot < 3; slot++) {
            CHECK(project(embed(p, slot, 3), g, slot) == p);
        }
    }
    const PauliOperator x0 = embed(PauliOperator::x_op(GroupElement(z2, {1})), 0, 2);
    const PauliOperator z1 = embed(PauliOperator::z_op(Character(z2, {1})), 1, 2);
    CHECK(beta(x0.vec(), z1.vec()).is_zero());
    // The mixed-radix index puts slot 0 first.
    const Group z22 = z2.power(2);
    CHECK(x0.x == GroupElement(z22, {1, 0}));
}

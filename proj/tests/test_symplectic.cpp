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
#include "gcliff/error.hpp"
#include "gcliff/symplectic.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

namespace {

const std::vector<std::vector<int64_t>> kGroups{{2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {4, 2}, {9, 3}};

/// beta(sigma u, sigma v) = beta(u, v) for all u, v, by enumeration.
bool brute_symplectic(const Group &g, const HomMatrix &sigma) {
    if (!brute_force_isomorphism(sigma)) {
        return false;
    }
    const auto elems = enumerate_elements(doubled_group(g));
    for (const GroupElement &u : elems) {
        for (const GroupElement &v : elems) {
            if (beta(element_to_vec(g, hom_apply(sigma, u)), element_to_vec(g, hom_apply(sigma, v))) !=
                beta(element_to_vec(g, u), element_to_vec(g, v))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("symplectic test") {
    const Group z2 = make_group({2});
    const Group d2 = doubled_group(z2);
    CHECK(is_symplectic(symplectic_identity(z2)));
    CHECK(is_symplectic(HomMatrix(d2, d2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_symplectic(HomMatrix(d2, d2, {{1, 1}, {1, 1}})));
    const Group z3 = make_group({3});
    const Group d3 = doubled_group(z3);
    CHECK_FALSE(is_symplectic(HomMatrix(d3, d3, {{1, 0}, {0, 2}})));
    std::mt19937_64 rng(51);
    for (const auto &orders : {std::vector<int64_t>{2}, {3}, {4}, {2, 2}}) {
        const Group g = make_group(orders);
        const Group dg = doubled_group(g);
        for (int t = 0; t < 40; t++) {
            const HomMatrix m = random_hom(dg, dg, rng);
            CHECK(is_symplectic(m) == brute_symplectic(g, m));
            CHECK(brute_symplectic(g, random_symplectic(g, rng)));
        }
    }
}

TEST_CASE("images of generators") {
    const Group z2 = make_group({2});
    const Group d2 = doubled_group(z2);
    CHECK(image_in_sp(FourierGate{HomMatrix::identity(z2)}) == HomMatrix(d2, d2, {{0, 1}, {1, 0}}));
    std::mt19937_64 rng(52);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        const PauliOperator p(PhaseRational(1, 2), random_element(g, rng), Character(random_element(g, rng)));
        CHECK(image_in_sp(PauliGate{p}) == symplectic_identity(g));
        GateSequence seq;
        for (int k = 0; k < 6; k++) {
            seq.push_back(random_generator_gate(g, rng));
        }
        GateSequence both = seq;
        for (const Gate &gate : inverse_sequence(seq)) {
            both.push_back(gate);
        }
        CHECK(image_of_sequence(g, both) == symplectic_identity(g));
        CHECK(image_of_sequence(g, seq) == tableau_symplectic(sequence_tableau(g, seq)));
    }
}

TEST_CASE("extending an element of maximal order to an automorphism") {
    const Group g = make_group({4, 2});
    CHECK(extend_to_automorphism(GroupElement::basis(g, 0)) == HomMatrix::identity(g));
    const HomMatrix tau = extend_to_automorphism(GroupElement(g, {1, 1}));
    CHECK(is_automorphism(tau));
    CHECK(brute_force_isomorphism(tau));
    CHECK(hom_apply(tau, GroupElement(g, {1, 1})) == GroupElement(g, {1, 0}));
    CHECK_THROWS_AS(extend_to_automorphism(GroupElement(g, {2, 0})), Error);
    try {
        extend_to_automorphism(GroupElement(g, {2, 0}));
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotExtendable);
    }
    std::mt19937_64 rng(53);
    const Group h = make_group({12, 6, 2});
    for (int t = 0; t < 50; t++) {
        const GroupElement v = random_element(h, rng);
        if (elem_order(v) != 12) {
            continue;
        }
        const HomMatrix m = extend_to_automorphism(v);
        CHECK(is_automorphism(m));
        CHECK(hom_apply(m, v) == GroupElement::basis(h, 0));
    }
}

TEST_CASE("decomposition of symplectic maps") {
    const Group z2 = make_group({2});
    CHECK(decompose(symplectic_identity(z2)).empty());
    const Group d2 = doubled_group(z2);
    const HomMatrix swap(d2, d2, {{0, 1}, {1, 0}});
    CHECK(image_of_sequence(z2, decompose(swap)) == swap);
    CHECK_THROWS_AS(decompose(HomMatrix(d2, d2, {{1, 1}, {1, 1}})), Error);
    std::mt19937_64 rng(54);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 25; t++) {
            const HomMatrix sigma = random_symplectic(g, rng);
            const GateSequence seq = decompose(sigma);
            CHECK(image_of_sequence(g, seq) == sigma);
            const int64_t d1 = static_cast<int64_t>(g.rank());
            CHECK(static_cast<int64_t>(seq.size()) <= kDecompositionGateConstant * d1 * d1);
        }
    }
}

TEST_CASE("decomposition of Clifford tableaux") {
    const Group g = make_group({2, 4});
    std::mt19937_64 rng(55);
    const PauliOperator p(PhaseRational(1, 4), GroupElement(g, {1, 3}), Character(g, {0, 2}));
    const GateSequence ps = decompose_clifford(gate_pauli(p));
    CHECK(ps.size() == 1);
    CHECK(std::holds_alternative<PauliGate>(ps.front()));
    CHECK(sequence_tableau(g, ps) == gate_pauli(p));
    const CliffordTableau q = gate_quadratic(random_quadratic_form(g, rng));
    CHECK(sequence_tableau(g, decompose_clifford(q)) == q);
    for (const auto &orders : kGroups) {
        const Group h = make_group(orders);
        for (int t = 0; t < 10; t++) {
            GateSequence seq;
            for (int k = 0; k < 10; k++) {
                seq.push_back(random_generator_gate(h, rng));
            }
            seq.push_back(PauliGate{PauliOperator(PhaseRational(1, 2), random_element(h, rng),
                                                  Character(random_element(h, rng)))});
            const CliffordTableau t0 = sequence_tableau(h, seq);
            const GateSequence out = decompose_clifford(t0);
            CHECK(sequence_tableau(h, out) == t0);
            CHECK(std::holds_alternative<PauliGate>(out.back()));
            if (h.size() <= 32) {
                CHECK(proportional_phase(dense_sequence(h, out), dense_sequence(h, seq)).has_value());
            }
        }
    }
}

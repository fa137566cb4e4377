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

PauliOperator random_pauli(const Group &g, std::mt19937_64 &rng) {
    const int64_t den = 2 * g.exponent();
    return PauliOperator(PhaseRational(static_cast<int64_t>(rng() % static_cast<uint64_t>(den)), den),
                         random_element(g, rng), Character(random_element(g, rng)));
}

/// U P U^dagger from matrices against the tableau image.
void check_dense_conjugation(const Gate &gate) {
    const Group &g = gate_group(gate);
    const DenseMatrix u = dense_gate(gate);
    const CliffordTableau t = gate_tableau(gate);
    for (size_t k = 0; k < g.rank(); k++) {
        for (const PauliOperator &p : {PauliOperator::x_op(GroupElement::basis(g, k)),
                                       PauliOperator::z_op(Character(GroupElement::basis(g, k)))}) {
            const DenseMatrix lhs = matmul(u, matmul(dense_pauli(p), adjoint(u)));
            CHECK(max_abs_diff(lhs, dense_pauli(conjugate(t, p))) <= kStateTolerance);
        }
    }
}

CliffordTableau random_tableau(const Group &g, std::mt19937_64 &rng) {
    GateSequence seq;
    for (int k = 0; k < 8; k++) {
        seq.push_back(random_generator_gate(g, rng));
    }
    seq.push_back(PauliGate{random_pauli(g, rng)});
    return sequence_tableau(g, seq);
}

const std::vector<std::vector<int64_t>> kGroups{{2}, {3}, {4}, {6}, {2, 2}, {2, 4}, {4, 2}};

}  // namespace

TEST_CASE("automorphism gates") {
    const Group g = make_group({4, 2});
    CHECK(gate_automorphism(HomMatrix::identity(g)) == tableau_identity(g));
    const Group z22 = make_group({2, 2});
    const CliffordTableau cx = gate_automorphism(HomMatrix(z22, z22, {{1, 0}, {1, 1}}));
    CHECK(cx.x_images[0] == PauliOperator::x_op(GroupElement(z22, {1, 1})));
    CHECK(cx.x_images[1] == PauliOperator::x_op(GroupElement(z22, {0, 1})));
    CHECK(cx.z_images[0] == PauliOperator::z_op(Character(z22, {1, 0})));
    CHECK(cx.z_images[1] == PauliOperator::z_op(Character(z22, {1, 1})));
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; t++) {
        const HomMatrix a = random_automorphism(g, rng), b = random_automorphism(g, rng);
        CHECK(gate_automorphism(hom_compose(b, a)) == compose(gate_automorphism(b), gate_automorphism(a)));
    }
}

TEST_CASE("phase gates") {
    const Group z2 = make_group({2});
    CHECK(gate_quadratic(QuadraticForm::zero(z2)) == tableau_identity(z2));
    const CliffordTableau s = gate_quadratic(QuadraticForm::diagonal(z2, {1}));
    CHECK(s.x_images[0] == PauliOperator(PhaseRational(1, 4), GroupElement(z2, {1}), Character(z2, {1})));
    std::mt19937_64 rng(42);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        const CliffordTableau t = gate_quadratic(random_quadratic_form(g, rng));
        for (size_t k = 0; k < g.rank(); k++) {
            CHECK(t.z_images[k] == PauliOperator::z_op(Character(GroupElement::basis(g, k))));
        }
    }
}

TEST_CASE("Fourier gates") {
    const Group z2 = make_group({2});
    const CliffordTableau h = gate_fourier(HomMatrix::identity(z2));
    CHECK(h.x_images[0] == PauliOperator::z_op(Character(z2, {1})));
    CHECK(h.z_images[0] == PauliOperator::x_op(GroupElement(z2, {1})));
    std::mt19937_64 rng(43);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        // Symmetric i: the square is the negation automorphism.
        const CliffordTableau f = gate_fourier(HomMatrix::identity(g));
        CHECK(compose(f, f) == gate_automorphism(hom_negate(HomMatrix::identity(g))));
        const HomMatrix iso = random_automorphism(g, rng);
        CHECK(compose(gate_fourier_dagger(iso), gate_fourier(iso)) == tableau_identity(g));
    }
}

TEST_CASE("every generator conjugates Paulis as its matrix does") {
    std::mt19937_64 rng(44);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        check_dense_conjugation(FourierGate{HomMatrix::identity(g)});
        for (int t = 0; t < 15; t++) {
            check_dense_conjugation(random_generator_gate(g, rng));
            check_dense_conjugation(FourierDaggerGate{random_automorphism(g, rng)});
            check_dense_conjugation(PauliGate{random_pauli(g, rng)});
        }
    }
}

TEST_CASE("tableau algebra") {
    std::mt19937_64 rng(45);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        CHECK(conjugate(tableau_identity(g), random_pauli(g, rng)).is_identity() == false);
        for (int t = 0; t < 10; t++) {
            const CliffordTableau a = random_tableau(g, rng), b = random_tableau(g, rng), c = random_tableau(g, rng);
            CHECK(tableau_is_valid(a));
            CHECK(compose(a, inverse(a)) == tableau_identity(g));
            CHECK(compose(inverse(a), a) == tableau_identity(g));
            CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
            const PauliOperator p = random_pauli(g, rng), q = random_pauli(g, rng);
            CHECK(conjugate(tableau_identity(g), p) == p);
            CHECK(conjugate(a, pauli_mul(p, q)) == pauli_mul(conjugate(a, p), conjugate(a, q)));
            CHECK(conjugate(compose(b, a), p) == conjugate(b, conjugate(a, p)));
        }
    }
}

TEST_CASE("(F S)^3 is the identity tableau for nondegenerate forms") {
    std::mt19937_64 rng(46);
    for (const auto &orders : kGroups) {
        const Group g = make_group(orders);
        for (int t = 0; t < 20; t++) {
            const QuadraticForm xi = random_quadratic_form(g, rng);
            if (!is_nondegenerate(xi)) {
                continue;
            }
            const CliffordTableau fs = compose(gate_fourier(i_xi_matrix(xi)), gate_quadratic(xi));
            CHECK(compose(fs, compose(fs, fs)) == tableau_identity(g));
        }
    }
}

TEST_CASE("two-local factorization") {
    const Group g = make_group({4, 2});
    std::mt19937_64 rng(47);
    const HomMatrix one = random_automorphism(g, rng);
    const auto single = two_local_factorize(one, g);
    CHECK(single.size() == 1);
    CHECK(single.front() == one);
    const Group g2 = g.power(2);
    const HomMatrix cx = block_matrix(HomMatrix::identity(g), HomMatrix::zero(g, g), HomMatrix::identity(g),
                                      HomMatrix::identity(g));
    const auto cx_f = two_local_factorize(cx, g);
    CHECK(cx_f.size() == 1);
    CHECK(cx_f.front() == cx);
    for (size_t n : {2, 3, 4}) {
        const Group big = g.power(n);
        for (int t = 0; t < 10; t++) {
            const HomMatrix tau = random_automorphism(big, rng);
            HomMatrix acc = HomMatrix::identity(big);
            for (const HomMatrix &f : two_local_factorize(tau, g)) {
                CHECK(touched_slots(f, g).size() <= 2);
                acc = hom_compose(f, acc);
            }
            CHECK(acc == tau);
        }
    }
    CHECK_THROWS_AS(two_local_factorize(HomMatrix::zero(g2, g2), g), Error);
}

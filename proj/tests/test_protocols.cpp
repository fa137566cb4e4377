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

#include <cmath>
#include <numbers>

#include "gcliff/error.hpp"
#include "gcliff/protocols.hpp"
#include "gcliff/simulate.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

namespace {

/// Kronecker product with the first factor most significant.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.dim * b.dim);
    for (uint64_t i = 0; i < a.dim; i++) {
        for (uint64_t j = 0; j < a.dim; j++) {
            for (uint64_t k = 0; k < b.dim; k++) {
                for (uint64_t l = 0; l < b.dim; l++) {
                    out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

DenseMatrix circuit_matrix(const Circuit &c) {
    DenseMatrix m = DenseMatrix::identity(c.local.size());
    for (const Operation &op : c.ops) {
        m = matmul(dense_gate(std::get<GateOp>(op).gate), m);
    }
    return m;
}

}  // namespace

TEST_CASE("CX by measurement") {
    for (const auto &orders : std::vector<std::vector<int64_t>>{{2}, {3}, {4}, {2, 4}}) {
        const ProtocolReport r = check_cx_protocol(make_group(orders));
        CHECK(r.passed());
        CHECK(r.branch_count > 0);
    }
    // Trivial outcomes on |0,0,0> leave the register unchanged.
    const Group z3 = make_group({3});
    const Circuit c = build_cx_protocol(z3);
    for (const DenseBranch &b : dense_branches(c)) {
        bool trivial = true;
        for (const auto &[name, v] : b.record) {
            for (int64_t k : v.outcomes) {
                trivial = trivial && k == 0;
            }
        }
        if (trivial) {
            CHECK(states_equal_up_to_phase(b.state, dense_zero_state(z3, 3)));
        }
    }
}

TEST_CASE("magic state injection") {
    const Group z2 = make_group({2});
    CHECK(check_magic_injection(z2, t_gate_table()).passed());
    CHECK(check_magic_injection(make_group({3}), cubic_table(make_group({3}))).passed());
    for (const auto &orders : std::vector<std::vector<int64_t>>{{2}, {4}, {2, 2}, {3}}) {
        const Group g = make_group(orders);
        CHECK(check_magic_injection(g, quad_table(standard_form(g))).passed());
    }
    // Independent check for the T analogue on |+>: every branch leaves
    // (|0> + e^{i pi/4}|1>)/sqrt2 on the data qudit.
    const MagicInjection inj = build_magic_injection(z2, t_gate_table());
    DenseState in = dense_zero_state(z2, 2);
    in.amp = {1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0), 0};
    const cplx t = std::polar(1.0, std::numbers::pi / 4);
    for (const DenseBranch &b : dense_branches(inj.circuit, in)) {
        const int64_t k = b.record.at("k").outcomes[0];
        const cplx a0 = b.state.amp[static_cast<size_t>(k)], a1 = b.state.amp[static_cast<size_t>(2 + k)];
        CHECK(std::abs(a0) == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(close(a1 / a0, t));
    }
    try {
        build_magic_injection(z2, {{{0}, PhaseRational()}, {{1}, PhaseRational(1, 32)}});
        FAIL("expected a precondition failure");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::PreconditionFailed);
        CHECK(std::string(e.what()).find("k = (1)") != std::string::npos);
    }
}

TEST_CASE("(F S)^3 scalar is the normalized Gauss sum") {
    const Group z2 = make_group({2});
    const ProtocolReport r2 = check_triple_identity(QuadraticForm::diagonal(z2, {1}));
    CHECK(r2.passed());
    REQUIRE(r2.phases.size() == 1);
    CHECK(close(r2.phases[0], std::polar(1.0, std::numbers::pi / 4)));
    // Z3 with diag 2: xi(n) = n^2/3, Gauss sum (1 + 2 e^{2 pi i/3})/sqrt3 = i.
    const Group z3 = make_group({3});
    const ProtocolReport r3 = check_triple_identity(QuadraticForm::diagonal(z3, {2}));
    CHECK(r3.passed());
    REQUIRE(r3.phases.size() == 1);
    CHECK(close(r3.phases[0], cplx(0, 1)));
    for (const auto &orders : std::vector<std::vector<int64_t>>{{4}, {2, 4}, {4, 2}, {6}, {9}}) {
        CHECK(check_triple_identity(standard_form(make_group(orders))).passed());
    }
    CHECK_THROWS_AS(check_triple_identity(QuadraticForm::zero(z3)), Error);
}

TEST_CASE("split Fourier") {
    const Group z2 = make_group({2});
    const QuadraticForm xi = QuadraticForm::diagonal(z2, {1});
    const DenseMatrix h = dense_gate(FourierGate{HomMatrix::identity(z2)});
    for (const HomMatrix &i_h : {HomMatrix::identity(z2), hom_negate(HomMatrix::identity(z2))}) {
        const Circuit c = build_split_fourier(xi, z2, i_h);
        CHECK(proportional_phase(circuit_matrix(c), kron(h, DenseMatrix::identity(2))).has_value());
    }
    const Group z4 = make_group({4});
    for (const HomMatrix &i_h : {HomMatrix::identity(z2), hom_negate(HomMatrix::identity(z2))}) {
        CHECK(check_split_fourier(standard_form(z4), z2, i_h).passed());
    }
    CHECK(check_split_fourier(standard_form(z2), z4, hom_negate(HomMatrix::identity(z4))).passed());
    CHECK(check_split_fourier(standard_form(make_group({3})), z4, HomMatrix::identity(z4)).passed());
    CHECK_THROWS_AS(build_split_fourier(QuadraticForm::zero(z2), z2, HomMatrix::identity(z2)), Error);
}

TEST_CASE("CX and one-slot maps do not generate Aut(G^2) for G = Z2 x Z4") {
    const Group g2 = make_group({2, 4, 2, 4});
    CHECK(cx_invariant_holds(HomMatrix::identity(g2)));
    CHECK_FALSE(cx_invariant_holds(cx_target_map()));
    CHECK(is_automorphism(cx_target_map()));
    for (const HomMatrix &gen : cx_subgroup_generators()) {
        CHECK(is_automorphism(gen));
        CHECK(cx_invariant_holds(gen));
    }
    CHECK(cx_subgroup_generators().size() == 18);
    const ProtocolReport r = cx_insufficiency_certificate(false);
    CHECK(r.passed());
    const ProtocolReport bfs = cx_insufficiency_certificate(true);
    CHECK(bfs.passed());
    CHECK_THROWS_AS(cx_insufficiency_certificate(true, 1000), Error);
}

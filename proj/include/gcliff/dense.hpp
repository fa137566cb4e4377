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

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gcliff/clifford.hpp"
#include "gcliff/kernels.hpp"

namespace gcliff {

/// Default limit on the dimension of dense matrices and state vectors.
inline constexpr uint64_t kDefaultDenseCap = 4096;
/// Gate-level and state-level floating point tolerances.
inline constexpr double kGateTolerance = 1e-12;
inline constexpr double kStateTolerance = 1e-9;

/// Square complex matrix, row-major.
struct DenseMatrix {
    uint64_t dim = 0;
    std::vector<cplx> data;

    DenseMatrix() = default;
    explicit DenseMatrix(uint64_t d) : dim(d), data(d * d, cplx(0)) {}
    static DenseMatrix identity(uint64_t d);
    cplx &at(uint64_t i, uint64_t j) { return data[i * dim + j]; }
    cplx at(uint64_t i, uint64_t j) const { return data[i * dim + j]; }
};

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix adjoint(const DenseMatrix &a);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
bool is_unitary(const DenseMatrix &a, double tol = kGateTolerance);
/// If a = c * b for a scalar c of modulus one (within tol), returns c.
std::optional<cplx> proportional_phase(const DenseMatrix &a, const DenseMatrix &b, double tol = kStateTolerance);

/// The matrix of a gate on C[G] for the gate's group G, basis in element
/// index order.
DenseMatrix dense_gate(const Gate &gate, uint64_t cap = kDefaultDenseCap);
DenseMatrix dense_pauli(const PauliOperator &p, uint64_t cap = kDefaultDenseCap);
DenseMatrix dense_sequence(const Group &g, const GateSequence &seq, uint64_t cap = kDefaultDenseCap);

/// A state of n qudits of the local group G.
struct DenseState {
    Group local;
    size_t n;
    std::vector<cplx> amp;

    SlotLayout layout() const { return SlotLayout{local.size(), n}; }
};

DenseState dense_zero_state(const Group &local, size_t n, uint64_t cap = kDefaultDenseCap);
/// |g_0, ..., g_{n-1}>.
DenseState dense_basis_state(const Group &local, const std::vector<GroupElement> &elems,
                             uint64_t cap = kDefaultDenseCap);
double dense_norm(const DenseState &s);
cplx dense_inner(const DenseState &a, const DenseState &b);
/// |<a|b>| >= 1 - 1e-9.
bool states_equal_up_to_phase(const DenseState &a, const DenseState &b);

void dense_apply(DenseState &s, const DenseMatrix &m, const std::vector<size_t> &slots);
/// p over G^n applied to the whole register.
std::vector<cplx> dense_apply_pauli(const DenseState &s, const PauliOperator &p);

}  // namespace gcliff

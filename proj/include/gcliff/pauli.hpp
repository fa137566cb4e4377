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

#include <string>

#include "gcliff/forms.hpp"
#include "gcliff/group.hpp"

namespace gcliff {

/// An element (g, chi) of G x G^, i.e. a Pauli operator modulo phase.
struct PauliVector {
    GroupElement x;
    Character z;

    PauliVector(GroupElement x_part, Character z_part);
    static PauliVector zero(const Group &g);
    const Group &group() const { return x.group(); }
    bool is_zero() const { return x.is_zero() && z.is_zero(); }
    bool operator==(const PauliVector &o) const { return x == o.x && z == o.z; }
    bool operator!=(const PauliVector &o) const { return !(*this == o); }
};

/// omega * X_g * Z_chi. Multi-qudit operators live over G^n with a single
/// global phase.
struct PauliOperator {
    PhaseRational phase;
    GroupElement x;
    Character z;

    PauliOperator(PhaseRational phase, GroupElement x_part, Character z_part);
    PauliOperator(PhaseRational phase, const PauliVector &v) : PauliOperator(phase, v.x, v.z) {}
    static PauliOperator identity(const Group &g);
    static PauliOperator x_op(const GroupElement &g);
    static PauliOperator z_op(const Character &chi);

    const Group &group() const { return x.group(); }
    PauliVector vec() const { return PauliVector(x, z); }
    bool is_identity() const { return phase.is_zero() && x.is_zero() && z.is_zero(); }
    bool operator==(const PauliOperator &o) const { return phase == o.phase && x == o.x && z == o.z; }
    bool operator!=(const PauliOperator &o) const { return !(*this == o); }
    std::string str() const;
};

PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q);
PauliOperator pauli_inverse(const PauliOperator &p);
/// p^k for any integer k.
PauliOperator pauli_pow(const PauliOperator &p, int64_t k);

/// chi_0(g_1) - chi_1(g_0): pq = beta(p, q) qp.
PhaseRational beta(const PauliVector &u, const PauliVector &v);
PauliVector vec_add(const PauliVector &u, const PauliVector &v);
PauliVector vec_scale(const PauliVector &u, int64_t k);
int64_t vec_order(const PauliVector &u);

/// Places p on copy `slot` of G^n.
PauliOperator embed(const PauliOperator &p, size_t slot, size_t n);
/// The restriction to copy `slot` of G^n (phase kept).
PauliOperator project(const PauliOperator &p, const Group &local, size_t slot);

/// The doubled group G x G carrying Pauli vectors, X coordinates first.
Group doubled_group(const Group &g);
GroupElement vec_to_element(const PauliVector &v);
PauliVector element_to_vec(const Group &g, const GroupElement &e);

}  // namespace gcliff

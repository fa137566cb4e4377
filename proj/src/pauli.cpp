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

#include "gcliff/pauli.hpp"

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

PauliVector::PauliVector(GroupElement x_part, Character z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    check_same_group(x.group(), z.group(), "PauliVector");
}

PauliVector PauliVector::zero(const Group &g) { return PauliVector(GroupElement::zero(g), Character::trivial(g)); }

PauliOperator::PauliOperator(PhaseRational phase_, GroupElement x_part, Character z_part)
    : phase(phase_), x(std::move(x_part)), z(std::move(z_part)) {
    check_same_group(x.group(), z.group(), "PauliOperator");
}

PauliOperator PauliOperator::identity(const Group &g) {
    return PauliOperator(PhaseRational(), GroupElement::zero(g), Character::trivial(g));
}

PauliOperator PauliOperator::x_op(const GroupElement &g) {
    return PauliOperator(PhaseRational(), g, Character::trivial(g.group()));
}

PauliOperator PauliOperator::z_op(const Character &chi) {
    return PauliOperator(PhaseRational(), GroupElement::zero(chi.group()), chi);
}

std::string PauliOperator::str() const {
    std::string out = "(" + phase.str() + ") X[";
    for (size_t i = 0; i < x.residues().size(); i++) {
        out += (i ? "," : "") + std::to_string(x[i]);
    }
    out += "] Z[";
    for (size_t i = 0; i < z.residues().size(); i++) {
        out += (i ? "," : "") + std::to_string(z[i]);
    }
    return out + "]";
}

PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q) {
    check_same_group(p.group(), q.group(), "pauli_mul");
    return PauliOperator(p.phase + q.phase + char_eval(p.z, q.x), p.x + q.x, Character(p.z + q.z));
}

PauliOperator pauli_inverse(const PauliOperator &p) {
    // (w X_g Z_chi)^{-1} = conj(w) Z_{-chi} X_{-g} = conj(w) chi(g) X_{-g} Z_{-chi}.
    return PauliOperator(-p.phase + char_eval(p.z, p.x), -p.x, Character(-p.z));
}

PauliOperator pauli_pow(const PauliOperator &p, int64_t k) {
    PauliOperator base = k < 0 ? pauli_inverse(p) : p;
    uint64_t e = k < 0 ? static_cast<uint64_t>(-(k + 1)) + 1 : static_cast<uint64_t>(k);
    PauliOperator acc = PauliOperator::identity(p.group());
    while (e) {
        if (e & 1) {
            acc = pauli_mul(acc, base);
        }
        e >>= 1;
        if (e) {
            base = pauli_mul(base, base);
        }
    }
    return acc;
}

PhaseRational beta(const PauliVector &u, const PauliVector &v) {
    check_same_group(u.group(), v.group(), "beta");
    return char_eval(u.z, v.x) - char_eval(v.z, u.x);
}

PauliVector vec_add(const PauliVector &u, const PauliVector &v) {
    return PauliVector(u.x + v.x, Character(u.z + v.z));
}

PauliVector vec_scale(const PauliVector &u, int64_t k) {
    return PauliVector(elem_scale(u.x, k), Character(elem_scale(u.z, k)));
}

int64_t vec_order(const PauliVector &u) { return lcm64(elem_order(u.x), elem_order(u.z)); }

PauliOperator embed(const PauliOperator &p, size_t slot, size_t n) {
    require(slot < n, ErrorCode::InvalidArgument,
            "slot " + std::to_string(slot) + " out of range for " + std::to_string(n) + " qudits");
    const Group &g = p.group();
    Group big = g.power(n);
    std::vector<int64_t> xs(big.rank(), 0), zs(big.rank(), 0);
    for (size_t i = 0; i < g.rank(); i++) {
        xs[slot * g.rank() + i] = p.x[i];
        zs[slot * g.rank() + i] = p.z[i];
    }
    return PauliOperator(p.phase, GroupElement(big, xs), Character(big, zs));
}

PauliOperator project(const PauliOperator &p, const Group &local, size_t slot) {
    size_t d = local.rank();
    require((slot + 1) * d <= p.group().rank(), ErrorCode::InvalidArgument, "project: slot out of range");
    std::vector<int64_t> xs(d), zs(d);
    for (size_t i = 0; i < d; i++) {
        xs[i] = p.x[slot * d + i];
        zs[i] = p.z[slot * d + i];
    }
    return PauliOperator(p.phase, GroupElement(local, xs), Character(local, zs));
}

Group doubled_group(const Group &g) { return group_product(g, g); }

GroupElement vec_to_element(const PauliVector &v) {
    std::vector<int64_t> r = v.x.residues();
    r.insert(r.end(), v.z.residues().begin(), v.z.residues().end());
    return GroupElement(doubled_group(v.group()), std::move(r));
}

PauliVector element_to_vec(const Group &g, const GroupElement &e) {
    size_t d = g.rank();
    require(e.residues().size() == 2 * d, ErrorCode::InvalidArgument, "element_to_vec: wrong length");
    std::vector<int64_t> xs(e.residues().begin(), e.residues().begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<int64_t> zs(e.residues().begin() + static_cast<std::ptrdiff_t>(d), e.residues().end());
    return PauliVector(GroupElement(g, xs), Character(g, zs));
}

}  // namespace gcliff

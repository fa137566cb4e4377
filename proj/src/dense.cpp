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

#include "gcliff/dense.hpp"

#include <cmath>
#include <numbers>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

namespace {

cplx root(const PhaseRational &p) { return p.to_complex(); }

void check_cap(uint64_t dim, uint64_t cap, const char *what) {
    require(dim <= cap, ErrorCode::CapExceeded,
            std::string(what) + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

DenseMatrix DenseMatrix::identity(uint64_t d) {
    DenseMatrix m(d);
    for (uint64_t i = 0; i < d; i++) {
        m.at(i, i) = 1.0;
    }
    return m;
}

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    require(a.dim == b.dim, ErrorCode::InvalidArgument, "matmul: dimension mismatch");
    DenseMatrix c(a.dim);
    const uint64_t n = a.dim;
    for (uint64_t i = 0; i < n; i++) {
        for (uint64_t k = 0; k < n; k++) {
            const cplx aik = a.at(i, k);
            if (aik == cplx(0)) {
                continue;
            }
            for (uint64_t j = 0; j < n; j++) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

DenseMatrix adjoint(const DenseMatrix &a) {
    DenseMatrix c(a.dim);
    for (uint64_t i = 0; i < a.dim; i++) {
        for (uint64_t j = 0; j < a.dim; j++) {
            c.at(j, i) = std::conj(a.at(i, j));
        }
    }
    return c;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    require(a.dim == b.dim, ErrorCode::InvalidArgument, "max_abs_diff: dimension mismatch");
    double d = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        d = std::max(d, std::abs(a.data[k] - b.data[k]));
    }
    return d;
}

bool is_unitary(const DenseMatrix &a, double tol) {
    return max_abs_diff(matmul(adjoint(a), a), DenseMatrix::identity(a.dim)) <= tol;
}

std::optional<cplx> proportional_phase(const DenseMatrix &a, const DenseMatrix &b, double tol) {
    if (a.dim != b.dim) {
        return std::nullopt;
    }
    // Take the ratio at the largest entry of b, then check everywhere.
    size_t best = 0;
    for (size_t k = 1; k < b.data.size(); k++) {
        if (std::abs(b.data[k]) > std::abs(b.data[best])) {
            best = k;
        }
    }
    if (b.data.empty() || std::abs(b.data[best]) < tol) {
        return std::nullopt;
    }
    cplx c = a.data[best] / b.data[best];
    if (std::abs(std::abs(c) - 1.0) > tol) {
        return std::nullopt;
    }
    for (size_t k = 0; k < a.data.size(); k++) {
        if (std::abs(a.data[k] - c * b.data[k]) > tol) {
            return std::nullopt;
        }
    }
    return c;
}

DenseMatrix dense_pauli(const PauliOperator &p, uint64_t cap) {
    const Group &g = p.group();
    check_cap(g.size(), cap, "dense_pauli");
    DenseMatrix m(g.size());
    const cplx w = root(p.phase);
    for (const GroupElement &h : enumerate_elements(g)) {
        m.at(element_index(h + p.x), element_index(h)) = w * root(char_eval(p.z, h));
    }
    return m;
}

DenseMatrix dense_gate(const Gate &gate, uint64_t cap) {
    const Group &g = gate_group(gate);
    check_cap(g.size(), cap, "dense_gate");
    const uint64_t n = g.size();
    DenseMatrix m(n);
    const auto elems = enumerate_elements(g);
    if (const auto *a = std::get_if<AutomorphismGate>(&gate)) {
        for (const GroupElement &h : elems) {
            m.at(element_index(hom_apply(a->tau, h)), element_index(h)) = 1.0;
        }
    } else if (const auto *s = std::get_if<QuadraticGate>(&gate)) {
        for (const GroupElement &h : elems) {
            const uint64_t k = element_index(h);
            m.at(k, k) = root(quad_eval(s->xi, h));
        }
    } else if (const auto *f = std::get_if<FourierGate>(&gate)) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(n));
        for (const GroupElement &chi : elems) {
            const uint64_t row = element_index(hom_apply(f->iso, chi));
            for (const GroupElement &h : elems) {
                m.at(row, element_index(h)) = norm * root(-pairing(chi, h));
            }
        }
    } else if (const auto *fd = std::get_if<FourierDaggerGate>(&gate)) {
        return adjoint(dense_gate(FourierGate{fd->iso}, cap));
    } else {
        return dense_pauli(std::get<PauliGate>(gate).pauli, cap);
    }
    return m;
}

DenseMatrix dense_sequence(const Group &g, const GateSequence &seq, uint64_t cap) {
    check_cap(g.size(), cap, "dense_sequence");
    DenseMatrix u = DenseMatrix::identity(g.size());
    for (const Gate &gate : seq) {
        check_same_group(gate_group(gate), g, "dense_sequence");
        u = matmul(dense_gate(gate, cap), u);
    }
    return u;
}

DenseState dense_zero_state(const Group &local, size_t n, uint64_t cap) {
    std::vector<GroupElement> zeros(n, GroupElement::zero(local));
    return dense_basis_state(local, zeros, cap);
}

DenseState dense_basis_state(const Group &local, const std::vector<GroupElement> &elems, uint64_t cap) {
    DenseState s{local, elems.size(), {}};
    const SlotLayout layout = s.layout();
    check_cap(layout.dim(), cap, "dense state");
    s.amp.assign(layout.dim(), cplx(0));
    uint64_t idx = 0;
    for (size_t k = 0; k < elems.size(); k++) {
        check_same_group(elems[k].group(), local, "dense_basis_state");
        idx += element_index(elems[k]) * layout.stride(k);
    }
    s.amp[idx] = 1.0;
    return s;
}

double dense_norm(const DenseState &s) {
    double acc = 0;
    for (const cplx &a : s.amp) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

cplx dense_inner(const DenseState &a, const DenseState &b) {
    require(a.amp.size() == b.amp.size(), ErrorCode::InvalidArgument, "dense_inner: dimension mismatch");
    cplx acc = 0;
    for (size_t k = 0; k < a.amp.size(); k++) {
        acc += std::conj(a.amp[k]) * b.amp[k];
    }
    return acc;
}

bool states_equal_up_to_phase(const DenseState &a, const DenseState &b) {
    return std::abs(dense_inner(a, b)) >= 1.0 - kStateTolerance;
}

void dense_apply(DenseState &s, const DenseMatrix &m, const std::vector<size_t> &slots) {
    uint64_t expect = 1;
    for (size_t slot : slots) {
        require(slot < s.n, ErrorCode::InvalidArgument, "dense_apply: slot out of range");
        expect *= s.local.size();
    }
    require(m.dim == expect, ErrorCode::InvalidArgument, "dense_apply: matrix does not match slot count");
    apply_local_matrix_parallel(s.amp, s.layout(), slots, m.data);
}

std::vector<cplx> dense_apply_pauli(const DenseState &s, const PauliOperator &p) {
    const Group full = s.local.power(s.n);
    check_same_group(p.group(), full, "dense_apply_pauli");
    const size_t r = full.rank();
    const int64_t e = full.exponent();
    // Odometer over the mixed-radix digits, last factor fastest; the
    // character value is tracked as a numerator over the exponent.
    std::vector<int64_t> digit(r, 0), weight(r), shifted(r), stride(r);
    uint64_t st = 1;
    for (size_t i = r; i-- > 0;) {
        stride[i] = static_cast<int64_t>(st);
        st *= static_cast<uint64_t>(full.order(i));
        weight[i] = p.z[i] * (e / full.order(i)) % e;
    }
    std::vector<cplx> roots(static_cast<size_t>(e));
    for (int64_t k = 0; k < e; k++) {
        roots[static_cast<size_t>(k)] = root(PhaseRational(k, e));
    }
    const cplx w = root(p.phase);
    const uint64_t dim = s.amp.size();
    std::vector<uint64_t> perm(dim);
    std::vector<cplx> phase(dim);
    int64_t target = 0, angle = 0;
    for (size_t i = 0; i < r; i++) {
        shifted[i] = p.x[i];
        target += shifted[i] * stride[i];
    }
    for (uint64_t k = 0; k < dim; k++) {
        perm[k] = static_cast<uint64_t>(target);
        phase[k] = w * roots[static_cast<size_t>(angle)];
        for (size_t i = r; i-- > 0;) {
            const int64_t q = full.order(i);
            angle = (angle + weight[i]) % e;
            target += stride[i];
            if (++shifted[i] == q) {
                shifted[i] = 0;
                target -= q * stride[i];
            }
            if (++digit[i] < q) {
                break;
            }
            digit[i] = 0;
            angle = mod(angle - q * weight[i], e);
        }
    }
    std::vector<cplx> out;
    apply_monomial_parallel(s.amp, out, perm, phase);
    return out;
}

}  // namespace gcliff

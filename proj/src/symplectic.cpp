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

#include "gcliff/symplectic.hpp"

#include <algorithm>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

namespace {

Group half_group(const HomMatrix &sigma) {
    const auto &orders = sigma.source().orders();
    const size_t r = orders.size() / 2;
    return Group(std::vector<int64_t>(orders.begin(), orders.begin() + static_cast<std::ptrdiff_t>(r)));
}

bool is_doubled(const Group &d) {
    const auto &o = d.orders();
    if (o.size() % 2) {
        return false;
    }
    const size_t r = o.size() / 2;
    return std::equal(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(r), o.begin() + static_cast<std::ptrdiff_t>(r));
}

PauliVector generator_vec(const Group &g, size_t k) {
    const size_t r = g.rank();
    if (k < r) {
        return PauliVector(GroupElement::basis(g, k), Character::trivial(g));
    }
    return PauliVector(GroupElement::zero(g), Character(GroupElement::basis(g, k - r)));
}

bool is_identity_map(const HomMatrix &m) { return m == HomMatrix::identity(m.source()); }

}  // namespace

bool is_symplectic(const SymplecticMap &sigma) {
    if (sigma.source() != sigma.target() || !is_doubled(sigma.source()) || !hom_is_valid(sigma)) {
        return false;
    }
    if (!is_automorphism(sigma)) {
        return false;
    }
    Group g = half_group(sigma);
    const size_t n = sigma.cols();
    std::vector<PauliVector> imgs;
    for (size_t k = 0; k < n; k++) {
        imgs.push_back(element_to_vec(g, sigma.column(k)));
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (beta(imgs[a], imgs[b]) != beta(generator_vec(g, a), generator_vec(g, b))) {
                return false;
            }
        }
    }
    return true;
}

SymplecticMap symplectic_identity(const Group &g) { return HomMatrix::identity(doubled_group(g)); }

SymplecticMap image_in_sp(const Gate &gate) {
    const Group &g = gate_group(gate);
    HomMatrix id = HomMatrix::identity(g);
    HomMatrix zero = HomMatrix::zero(g, g);
    return std::visit(
        [&](const auto &x) -> SymplecticMap {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AutomorphismGate>) {
                return block_matrix(x.tau, zero, zero, dual_hom(invert_automorphism(x.tau)));
            } else if constexpr (std::is_same_v<T, QuadraticGate>) {
                return block_matrix(id, zero, induced_map(polarize(x.xi)), id);
            } else if constexpr (std::is_same_v<T, FourierGate>) {
                return block_matrix(zero, x.iso, hom_negate(dual_hom(invert_automorphism(x.iso))), zero);
            } else if constexpr (std::is_same_v<T, FourierDaggerGate>) {
                return block_matrix(zero, hom_negate(dual_hom(x.iso)), invert_automorphism(x.iso), zero);
            } else {
                return symplectic_identity(g);
            }
        },
        gate);
}

SymplecticMap image_of_sequence(const Group &g, const GateSequence &seq) {
    SymplecticMap m = symplectic_identity(g);
    for (const auto &gate : seq) {
        check_same_group(g, gate_group(gate), "image_of_sequence");
        m = hom_compose(image_in_sp(gate), m);
    }
    return m;
}

HomMatrix extend_to_automorphism(const GroupElement &v) {
    const Group &g = v.group();
    require(g.canonical(), ErrorCode::NotExtendable,
            "extend_to_automorphism needs a canonical group, got " + g.literal());
    const size_t n = g.rank();
    const int64_t q0 = g.order(0);
    HomMatrix tau = HomMatrix::identity(g);
    std::vector<int64_t> w = v.residues();
    for (size_t j = 1; j < n; j++) {
        int64_t s = q0 / g.order(j);
        int64_t k = unit_shift(w[0], s * w[j], q0);
        if (k) {
            HomMatrix e = HomMatrix::identity(g);
            e.set(0, j, k * s);
            tau = hom_compose(e, tau);
            w[0] = add_mod(w[0], mul_mod(k * s, w[j], q0), q0);
        }
    }
    int64_t u = inverse_mod(w[0], q0);
    if (u < 0) {
        fail(ErrorCode::NotExtendable, "element has order " + std::to_string(elem_order(v)) + " < " +
                                           std::to_string(q0) + " and generates no maximal cyclic summand");
    }
    HomMatrix scale = HomMatrix::identity(g);
    scale.set(0, 0, u);
    tau = hom_compose(scale, tau);
    HomMatrix clear = HomMatrix::identity(g);
    for (size_t j = 1; j < n; j++) {
        clear.set(j, 0, -w[j]);
    }
    tau = hom_compose(clear, tau);
    if (!is_automorphism(tau) || hom_apply(tau, v) != GroupElement::basis(g, 0)) {
        fail(ErrorCode::NotExtendable, "extension failed validation");
    }
    return tau;
}

namespace {

void append_inverse(GateSequence &out, const Gate &gate) {
    std::visit(
        [&](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AutomorphismGate>) {
                out.push_back(AutomorphismGate{invert_automorphism(x.tau)});
            } else if constexpr (std::is_same_v<T, QuadraticGate>) {
                out.push_back(QuadraticGate{quad_negate(x.xi)});
            } else if constexpr (std::is_same_v<T, FourierGate>) {
                // F_i^{-1} = F_{dual i} A_{-1}.
                const Group &g = x.iso.source();
                out.push_back(AutomorphismGate{hom_negate(HomMatrix::identity(g))});
                out.push_back(FourierGate{dual_hom(x.iso)});
            } else if constexpr (std::is_same_v<T, FourierDaggerGate>) {
                out.push_back(FourierGate{x.iso});
            } else {
                out.push_back(PauliGate{pauli_inverse(x.pauli)});
            }
        },
        gate);
}

// Row reduction of a symplectic map over a canonical group. Each level l
// turns the X_l and Z_l columns into unit vectors with moves that act as the
// identity on slots < l; the gates applied on the left are recorded.
class Reducer {
   public:
    Reducer(const Group &g, SymplecticMap sigma) : g_(g), r_(g.rank()), m_(std::move(sigma)) {}

    GateSequence run() {
        for (size_t l = 0; l < r_; l++) {
            level(l);
        }
        check(is_identity_map(m_), "reduction did not reach the identity");
        GateSequence out;
        for (size_t k = left_.size(); k-- > 0;) {
            append_inverse(out, left_[k]);
        }
        return out;
    }

   private:
    void check(bool cond, const std::string &what) const {
        require(cond, ErrorCode::InternalReductionFailure, "decompose: " + what);
    }

    PauliVector col(size_t k) const { return element_to_vec(g_, m_.column(k)); }

    void push(Gate gate) {
        SymplecticMap img = image_in_sp(gate);
        if (is_identity_map(img)) {
            return;
        }
        m_ = hom_compose(img, m_);
        left_.push_back(std::move(gate));
    }

    Group sub(size_t l) const {
        return Group(std::vector<int64_t>(g_.orders().begin() + static_cast<std::ptrdiff_t>(l), g_.orders().end()));
    }

    // h on slots >= l, identity below.
    HomMatrix lift(const HomMatrix &h, size_t l) const {
        if (l == 0) {
            return h;
        }
        return hom_direct_sum(HomMatrix::identity(sub_low(l)), h);
    }

    Group sub_low(size_t l) const {
        return Group(std::vector<int64_t>(g_.orders().begin(), g_.orders().begin() + static_cast<std::ptrdiff_t>(l)));
    }

    GroupElement restrict(const GroupElement &e, size_t l) const {
        return GroupElement(sub(l), std::vector<int64_t>(e.residues().begin() + static_cast<std::ptrdiff_t>(l),
                                                         e.residues().end()));
    }

    // S gate for the symmetric coefficients b (on all of G).
    void push_phase(const std::vector<std::vector<int64_t>> &b) {
        push(QuadraticGate{lift_bilinear(SymmetricBilinearForm(g_, b))});
    }

    // Symmetric matrix with row/column l equal to v on slots >= l.
    std::vector<std::vector<int64_t>> star(size_t l, const std::vector<int64_t> &v) const {
        std::vector<std::vector<int64_t>> b(r_, std::vector<int64_t>(r_, 0));
        for (size_t j = l; j < r_; j++) {
            b[l][j] = v[j];
            b[j][l] = v[j];
        }
        return b;
    }

    bool zero_below(const GroupElement &e, size_t l) const {
        for (size_t j = 0; j < l; j++) {
            if (e[j]) {
                return false;
            }
        }
        return true;
    }

    // Swaps X and Z on slots >= l: image [[0, I], [-I, 0]] there, identity
    // elsewhere.
    void partial_fourier(size_t l) {
        if (l == 0) {
            push(FourierGate{HomMatrix::identity(g_)});
            return;
        }
        Group top = sub(l);
        Group low = sub_low(l);
        std::vector<int64_t> diag(top.rank());
        for (size_t j = 0; j < top.rank(); j++) {
            diag[j] = top.order(j) % 2 == 0 ? 1 : 2;
        }
        QuadraticForm xi_top = QuadraticForm::diagonal(top, diag);
        QuadraticForm xi = extend_by_zero(xi_top, low, false);
        HomMatrix iso = lift(i_xi_matrix(xi_top), l);
        HomMatrix neg_low = hom_direct_sum(hom_negate(HomMatrix::identity(low)), HomMatrix::identity(top));
        GateSequence circuit = {QuadraticGate{xi}, FourierGate{iso}, QuadraticGate{xi},
                                FourierGate{iso},  QuadraticGate{xi}, AutomorphismGate{neg_low}};
        SymplecticMap p = image_of_sequence(g_, circuit);
        // p is [[0, alpha], [gamma, 0]] on the top slots; undo alpha.
        HomMatrix alpha = HomMatrix::zero(top, top);
        for (size_t i = 0; i < top.rank(); i++) {
            for (size_t j = 0; j < top.rank(); j++) {
                alpha.set(i, j, p.at(l + i, r_ + l + j));
            }
        }
        check(is_automorphism(alpha), "split Fourier block is not invertible");
        circuit.push_back(AutomorphismGate{lift(invert_automorphism(alpha), l)});
        SymplecticMap expect = symplectic_identity(g_);
        for (size_t j = l; j < r_; j++) {
            expect.set(j, j, 0);
            expect.set(r_ + j, r_ + j, 0);
            expect.set(j, r_ + j, 1);
            expect.set(r_ + j, j, -1);
        }
        check(image_of_sequence(g_, circuit) == expect, "split Fourier circuit has the wrong image");
        for (auto &gate : circuit) {
            push(std::move(gate));
        }
    }

    void level(size_t l) {
        const int64_t ql = g_.order(l);
        PauliVector c = col(l);
        check(zero_below(c.x, l) && zero_below(c.z, l), "column leaks into reduced slots");

        if (elem_order(c.x) != ql) {
            std::vector<std::vector<int64_t>> b(r_, std::vector<int64_t>(r_, 0));
            for (size_t j = l; j < r_; j++) {
                b[j][j] = unit_shift(c.z[j], c.x[j], g_.order(j));
            }
            push_phase(b);
            check(elem_order(col(l).z) == ql, "gcd step left no element of maximal order");
            partial_fourier(l);
            check(elem_order(col(l).x) == ql, "Fourier step did not move the maximal element");
        }

        HomMatrix tau = extend_to_automorphism(restrict(col(l).x, l));
        push(AutomorphismGate{lift(tau, l)});
        check(col(l).x == GroupElement::basis(g_, l), "pivot is not e_l");

        {
            std::vector<int64_t> v(r_, 0);
            for (size_t j = l; j < r_; j++) {
                v[j] = -col(l).z[j];
            }
            push_phase(star(l, v));
            check(col(l).z.is_zero(), "Z part of the pivot column not cleared");
        }

        {
            PauliVector zc = col(r_ + l);
            check(zc.z[l] == 1 % ql, "symplectic pairing of the pivot columns is not 1");
            HomMatrix mu = HomMatrix::identity(g_);
            for (size_t j = l; j < r_; j++) {
                if (j != l) {
                    mu.set(j, l, -zc.z[j]);
                }
            }
            push(AutomorphismGate{invert_automorphism(dual_hom(mu))});
            check(col(l).x == GroupElement::basis(g_, l) && col(l).z.is_zero(), "pivot column disturbed");
            check(col(r_ + l).z == GroupElement::basis(g_, l), "Z part of the dual column not e_l");
        }

        {
            PauliVector zc = col(r_ + l);
            if (!zc.x.is_zero()) {
                std::vector<int64_t> v(r_, 0);
                for (size_t j = l; j < r_; j++) {
                    v[j] = zc.x[j];
                }
                // F S F^{-1} adds -b(Z) to the X part.
                HomMatrix id = HomMatrix::identity(g_);
                push(AutomorphismGate{hom_negate(id)});
                push(FourierGate{id});
                push_phase(star(l, v));
                push(FourierGate{id});
            }
        }

        for (size_t k : {l, r_ + l}) {
            for (size_t i = 0; i < 2 * r_; i++) {
                int64_t want = i == k ? 1 % m_.target().order(i) : 0;
                check(m_.at(i, k) == want && m_.at(k, i) == want, "level " + std::to_string(l) + " not reduced");
            }
        }
    }

    Group g_;
    size_t r_;
    SymplecticMap m_;
    GateSequence left_;
};

// Block map [[phi, 0], [0, dual(phi^{-1})]] between doubled groups.
HomMatrix doubled_iso(const HomMatrix &phi, const HomMatrix &phi_inv) {
    HomMatrix zero_xz = HomMatrix::zero(phi.source(), phi.target());
    return block_matrix(phi, zero_xz, zero_xz, dual_hom(phi_inv));
}

Gate transport_gate(const Gate &gate, const Isomorphism &iso) {
    const HomMatrix &fwd = iso.forward;
    const HomMatrix &bwd = iso.backward;
    return std::visit(
        [&](const auto &x) -> Gate {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AutomorphismGate>) {
                return AutomorphismGate{hom_compose(bwd, hom_compose(x.tau, fwd))};
            } else if constexpr (std::is_same_v<T, QuadraticGate>) {
                return QuadraticGate{pullback(x.xi, fwd)};
            } else if constexpr (std::is_same_v<T, FourierGate>) {
                return FourierGate{hom_compose(bwd, hom_compose(x.iso, dual_hom(bwd)))};
            } else if constexpr (std::is_same_v<T, FourierDaggerGate>) {
                return FourierDaggerGate{hom_compose(bwd, hom_compose(x.iso, dual_hom(bwd)))};
            } else {
                return PauliGate{PauliOperator(x.pauli.phase, hom_apply(bwd, x.pauli.x),
                                               Character(hom_apply(dual_hom(fwd), x.pauli.z)))};
            }
        },
        gate);
}

}  // namespace

GateSequence decompose(const SymplecticMap &sigma) {
    require(is_symplectic(sigma), ErrorCode::NotSymplectic, "decompose: input map is not symplectic");
    Group g = half_group(sigma);
    GateSequence out;
    if (g.canonical()) {
        out = Reducer(g, sigma).run();
    } else {
        auto [gc, iso] = canonicalize(g);
        HomMatrix big = doubled_iso(iso.forward, iso.backward);
        HomMatrix big_inv = doubled_iso(iso.backward, iso.forward);
        SymplecticMap sc = hom_compose(big, hom_compose(sigma, big_inv));
        for (const auto &gate : Reducer(gc, sc).run()) {
            out.push_back(transport_gate(gate, iso));
        }
    }
    require(image_of_sequence(g, out) == sigma, ErrorCode::InternalReductionFailure,
            "decompose: sequence image differs from the input");
    return out;
}

GateSequence decompose_clifford(const CliffordTableau &t) {
    const Group &g = t.group;
    require(tableau_is_valid(t), ErrorCode::NotSymplectic, "decompose_clifford: tableau is not a valid Clifford");
    SymplecticMap sigma = tableau_symplectic(t);
    GateSequence seq = decompose(sigma);
    CliffordTableau ts = sequence_tableau(g, seq);
    const size_t r = g.rank();
    std::vector<int64_t> wx(r), wz(r);
    for (size_t k = 0; k < r; k++) {
        PhaseRational dx = t.x_images[k].phase - ts.x_images[k].phase;
        PhaseRational dz = t.z_images[k].phase - ts.z_images[k].phase;
        int64_t q = g.order(k);
        require(q % dx.den() == 0 && q % dz.den() == 0, ErrorCode::InternalReductionFailure,
                "decompose_clifford: phase mismatch is not a Pauli frame");
        wz[k] = dx.num() * (q / dx.den());
        wx[k] = -dz.num() * (q / dz.den());
    }
    PauliVector w(GroupElement(g, wx), Character(g, wz));
    PauliVector p = element_to_vec(g, hom_apply(sigma, vec_to_element(w)));
    seq.push_back(PauliGate{PauliOperator(PhaseRational(), p)});
    require(sequence_tableau(g, seq) == t, ErrorCode::InternalReductionFailure,
            "decompose_clifford: recomposed tableau differs");
    return seq;
}

GateSequence inverse_sequence(const GateSequence &seq) {
    GateSequence out;
    for (size_t k = seq.size(); k-- > 0;) {
        append_inverse(out, seq[k]);
    }
    return out;
}

HomMatrix random_automorphism(const Group &g, std::mt19937_64 &rng) {
    for (int attempt = 0; attempt < 100000; attempt++) {
        HomMatrix m = HomMatrix::zero(g, g);
        for (size_t i = 0; i < g.rank(); i++) {
            for (size_t j = 0; j < g.rank(); j++) {
                int64_t step = g.order(i) / std::gcd(g.order(i), g.order(j));
                std::uniform_int_distribution<int64_t> dist(0, g.order(i) / step - 1);
                m.set(i, j, dist(rng) * step);
            }
        }
        if (is_automorphism(m)) {
            return m;
        }
    }
    fail(ErrorCode::InternalReductionFailure, "random_automorphism: sampling failed");
}

QuadraticForm random_quadratic_form(const Group &g, std::mt19937_64 &rng) {
    const size_t d = g.rank();
    std::vector<std::vector<int64_t>> b(d, std::vector<int64_t>(d, 0));
    std::vector<int64_t> lin(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i; j < d; j++) {
            std::uniform_int_distribution<int64_t> dist(0, std::gcd(g.order(i), g.order(j)) - 1);
            b[i][j] = b[j][i] = dist(rng);
        }
        lin[i] = std::uniform_int_distribution<int64_t>(0, g.order(i) - 1)(rng);
    }
    QuadraticForm base = lift_bilinear(SymmetricBilinearForm(g, b));
    return QuadraticForm(g, base.diag(), base.cross(), lin);
}

Gate random_generator_gate(const Group &g, std::mt19937_64 &rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            return AutomorphismGate{random_automorphism(g, rng)};
        case 1:
            return QuadraticGate{random_quadratic_form(g, rng)};
        default:
            return FourierGate{random_automorphism(g, rng)};
    }
}

SymplecticMap random_symplectic(const Group &g, std::mt19937_64 &rng) {
    SymplecticMap m = symplectic_identity(g);
    const size_t count = 20 * g.rank();
    for (size_t k = 0; k < count; k++) {
        m = hom_compose(image_in_sp(random_generator_gate(g, rng)), m);
    }
    return m;
}

}  // namespace gcliff

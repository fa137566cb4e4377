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

#include "gcliff/clifford.hpp"

#include <algorithm>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

const Group &gate_group(const Gate &gate) {
    return std::visit(
        [](const auto &g) -> const Group & {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, AutomorphismGate>) {
                return g.tau.source();
            } else if constexpr (std::is_same_v<T, QuadraticGate>) {
                return g.xi.group();
            } else if constexpr (std::is_same_v<T, PauliGate>) {
                return g.pauli.group();
            } else {
                return g.iso.source();
            }
        },
        gate);
}

std::string gate_name(const Gate &gate) {
    static const char *names[] = {"A", "S", "F", "Fdag", "P"};
    return names[gate.index()];
}

CliffordTableau tableau_identity(const Group &g) {
    CliffordTableau t{g, {}, {}};
    for (size_t k = 0; k < g.rank(); k++) {
        t.x_images.push_back(PauliOperator::x_op(GroupElement::basis(g, k)));
        t.z_images.push_back(PauliOperator::z_op(Character(GroupElement::basis(g, k))));
    }
    return t;
}

CliffordTableau gate_automorphism(const HomMatrix &tau) {
    require(tau.source() == tau.target(), ErrorCode::InvalidArgument, "automorphism gate needs an endomorphism");
    HomMatrix dual_inv = dual_hom(invert_automorphism(tau));
    const Group &g = tau.source();
    CliffordTableau t{g, {}, {}};
    for (size_t k = 0; k < g.rank(); k++) {
        t.x_images.push_back(PauliOperator::x_op(tau.column(k)));
        t.z_images.push_back(PauliOperator::z_op(Character(dual_inv.column(k))));
    }
    return t;
}

CliffordTableau gate_quadratic(const QuadraticForm &xi) {
    const Group &g = xi.group();
    HomMatrix b = induced_map(polarize(xi));
    CliffordTableau t = tableau_identity(g);
    for (size_t k = 0; k < g.rank(); k++) {
        auto e = GroupElement::basis(g, k);
        t.x_images[k] = PauliOperator(quad_eval(xi, e), e, Character(b.column(k)));
    }
    return t;
}

CliffordTableau gate_fourier(const HomMatrix &iso) {
    require(iso.source() == iso.target(), ErrorCode::InvalidArgument, "Fourier gate needs an isomorphism over G");
    HomMatrix m = hom_negate(dual_hom(invert_automorphism(iso)));
    const Group &g = iso.source();
    CliffordTableau t{g, {}, {}};
    for (size_t k = 0; k < g.rank(); k++) {
        t.x_images.push_back(PauliOperator::z_op(Character(m.column(k))));
        t.z_images.push_back(PauliOperator::x_op(iso.column(k)));
    }
    return t;
}

CliffordTableau gate_fourier_dagger(const HomMatrix &iso) { return inverse(gate_fourier(iso)); }

CliffordTableau gate_pauli(const PauliOperator &p) {
    const Group &g = p.group();
    CliffordTableau t = tableau_identity(g);
    for (size_t k = 0; k < g.rank(); k++) {
        t.x_images[k].phase = beta(p.vec(), t.x_images[k].vec());
        t.z_images[k].phase = beta(p.vec(), t.z_images[k].vec());
    }
    return t;
}

CliffordTableau gate_tableau(const Gate &gate) {
    return std::visit(
        [](const auto &g) -> CliffordTableau {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, AutomorphismGate>) {
                return gate_automorphism(g.tau);
            } else if constexpr (std::is_same_v<T, QuadraticGate>) {
                return gate_quadratic(g.xi);
            } else if constexpr (std::is_same_v<T, FourierGate>) {
                return gate_fourier(g.iso);
            } else if constexpr (std::is_same_v<T, FourierDaggerGate>) {
                return gate_fourier_dagger(g.iso);
            } else {
                return gate_pauli(g.pauli);
            }
        },
        gate);
}

CliffordTableau sequence_tableau(const Group &g, const GateSequence &seq) {
    CliffordTableau t = tableau_identity(g);
    for (const auto &gate : seq) {
        check_same_group(g, gate_group(gate), "sequence_tableau");
        t = compose(gate_tableau(gate), t);
    }
    return t;
}

PauliOperator conjugate(const CliffordTableau &t, const PauliOperator &p) {
    check_same_group(t.group, p.group(), "conjugate");
    // X_g Z_chi = (prod_k X_{e_k}^{g_k}) (prod_k Z_{e_k}^{chi_k}) exactly.
    PauliOperator acc = PauliOperator::identity(t.group);
    acc.phase = p.phase;
    for (size_t k = 0; k < t.group.rank(); k++) {
        if (p.x[k]) {
            acc = pauli_mul(acc, pauli_pow(t.x_images[k], p.x[k]));
        }
    }
    for (size_t k = 0; k < t.group.rank(); k++) {
        if (p.z[k]) {
            acc = pauli_mul(acc, pauli_pow(t.z_images[k], p.z[k]));
        }
    }
    return acc;
}

CliffordTableau compose(const CliffordTableau &t2, const CliffordTableau &t1) {
    check_same_group(t2.group, t1.group, "compose");
    CliffordTableau out{t1.group, {}, {}};
    for (const auto &p : t1.x_images) {
        out.x_images.push_back(conjugate(t2, p));
    }
    for (const auto &p : t1.z_images) {
        out.z_images.push_back(conjugate(t2, p));
    }
    return out;
}

HomMatrix tableau_symplectic(const CliffordTableau &t) {
    Group d = doubled_group(t.group);
    HomMatrix m = HomMatrix::zero(d, d);
    const size_t r = t.group.rank();
    for (size_t k = 0; k < r; k++) {
        auto xv = vec_to_element(t.x_images[k].vec());
        auto zv = vec_to_element(t.z_images[k].vec());
        for (size_t i = 0; i < 2 * r; i++) {
            m.set(i, k, xv[i]);
            m.set(i, r + k, zv[i]);
        }
    }
    return m;
}

CliffordTableau inverse(const CliffordTableau &t) {
    HomMatrix inv = invert_automorphism(tableau_symplectic(t));
    const size_t r = t.group.rank();
    CliffordTableau out{t.group, {}, {}};
    for (size_t k = 0; k < 2 * r; k++) {
        PauliOperator cand(PhaseRational(), element_to_vec(t.group, inv.column(k)));
        cand.phase = -conjugate(t, cand).phase;
        (k < r ? out.x_images : out.z_images).push_back(cand);
    }
    return out;
}

bool tableau_is_valid(const CliffordTableau &t) {
    const Group &g = t.group;
    const size_t r = g.rank();
    if (t.x_images.size() != r || t.z_images.size() != r) {
        return false;
    }
    std::vector<PauliVector> gens, imgs;
    for (size_t k = 0; k < r; k++) {
        gens.push_back(PauliOperator::x_op(GroupElement::basis(g, k)).vec());
        imgs.push_back(t.x_images[k].vec());
    }
    for (size_t k = 0; k < r; k++) {
        gens.push_back(PauliOperator::z_op(Character(GroupElement::basis(g, k))).vec());
        imgs.push_back(t.z_images[k].vec());
    }
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            if (beta(imgs[a], imgs[b]) != beta(gens[a], gens[b])) {
                return false;
            }
        }
    }
    for (size_t k = 0; k < r; k++) {
        if (!pauli_pow(t.x_images[k], g.order(k)).is_identity() ||
            !pauli_pow(t.z_images[k], g.order(k)).is_identity()) {
            return false;
        }
    }
    return is_automorphism(tableau_symplectic(t));
}

HomMatrix block_matrix(const HomMatrix &a, const HomMatrix &b, const HomMatrix &c, const HomMatrix &d) {
    const Group &src = a.source();
    const Group &tgt = a.target();
    const size_t r = src.rank();
    const size_t rt = tgt.rank();
    HomMatrix m = HomMatrix::zero(doubled_group(src), doubled_group(tgt));
    for (size_t i = 0; i < rt; i++) {
        for (size_t j = 0; j < r; j++) {
            m.set(i, j, a.at(i, j));
            m.set(i, r + j, b.at(i, j));
            m.set(rt + i, j, c.at(i, j));
            m.set(rt + i, r + j, d.at(i, j));
        }
    }
    return m;
}

HomMatrix hom_negate(const HomMatrix &m) {
    HomMatrix out = m;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out.set(i, j, -m.at(i, j));
        }
    }
    return out;
}

std::vector<size_t> touched_slots(const HomMatrix &m, const Group &local) {
    const size_t d = local.rank();
    const size_t n = m.rows() / d;
    std::vector<size_t> out;
    for (size_t s = 0; s < n; s++) {
        bool touched = false;
        for (size_t a = s * d; a < (s + 1) * d && !touched; a++) {
            for (size_t b = 0; b < m.cols() && !touched; b++) {
                int64_t id = a == b ? mod(1, m.target().order(a)) : 0;
                touched = m.at(a, b) != id || m.at(b, a) != (a == b ? mod(1, m.target().order(b)) : 0);
            }
        }
        if (touched) {
            out.push_back(s);
        }
    }
    return out;
}

namespace {

int64_t smallest_prime(int64_t q) { return factorize(q).front().first; }

}  // namespace

std::vector<HomMatrix> two_local_factorize(const HomMatrix &tau, const Group &local) {
    const size_t d = local.rank();
    require(tau.source() == tau.target() && tau.rows() % d == 0, ErrorCode::InvalidArgument,
            "two_local_factorize needs an endomorphism of a power of the local group");
    const size_t n = tau.rows() / d;
    check_same_group(tau.source(), local.power(n), "two_local_factorize");
    if (!is_automorphism(tau)) {
        invert_automorphism(tau);  // throws with a witness
    }
    if (n == 1 || touched_slots(tau, local).size() <= 2) {
        return {tau};
    }

    // In primary coordinates every cyclic factor sits inside one qudit and
    // homomorphisms between factors of different primes vanish.
    auto [pg, phi] = primary_decomposition(tau.source());
    HomMatrix t = hom_compose(phi.forward, hom_compose(tau, phi.backward));
    const size_t r = pg.rank();
    std::vector<size_t> order(r);
    for (size_t k = 0; k < r; k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        int64_t pa = smallest_prime(pg.order(a)), pb = smallest_prime(pg.order(b));
        if (pa != pb) {
            return pa < pb;
        }
        return pg.order(a) > pg.order(b);
    });

    std::vector<HomMatrix> ops;
    auto apply = [&](HomMatrix e) {
        t = hom_compose(e, t);
        ops.push_back(std::move(e));
    };
    auto elementary = [&](size_t row, size_t col, int64_t v) {
        HomMatrix e = HomMatrix::identity(pg);
        e.set(row, col, row == col ? v : e.at(row, col) + v);
        return e;
    };

    for (size_t pos = 0; pos < r; pos++) {
        size_t c = order[pos];
        int64_t qc = pg.order(c);
        int64_t p = smallest_prime(qc);
        for (size_t k = pos + 1; k < r && std::gcd(t.at(c, c), qc) != 1; k++) {
            size_t f = order[k];
            if (smallest_prime(pg.order(f)) != p) {
                break;
            }
            int64_t s = qc / pg.order(f);
            int64_t shift = unit_shift(t.at(c, c), s * t.at(f, c), qc);
            if (shift) {
                apply(elementary(c, f, shift * s));
            }
        }
        int64_t u = inverse_mod(t.at(c, c), qc);
        require(u >= 0, ErrorCode::InternalReductionFailure, "two_local_factorize: no unit pivot");
        if (u != 1 % qc) {
            apply(elementary(c, c, u));
        }
        for (size_t k = pos + 1; k < r; k++) {
            size_t f = order[k];
            if (t.at(f, c)) {
                apply(elementary(f, c, -t.at(f, c)));
            }
        }
    }
    for (size_t pos = r; pos-- > 0;) {
        size_t c = order[pos];
        for (size_t k = 0; k < pos; k++) {
            size_t f = order[k];
            if (t.at(f, c)) {
                apply(elementary(f, c, -t.at(f, c)));
            }
        }
    }
    require(t == HomMatrix::identity(pg), ErrorCode::InternalReductionFailure,
            "two_local_factorize: elimination did not reach the identity");

    // tau = Phi^{-1} E_1^{-1} ... E_k^{-1} Phi; E_k^{-1} acts first.
    std::vector<HomMatrix> factors;
    for (size_t k = ops.size(); k-- > 0;) {
        HomMatrix f = hom_compose(phi.backward, hom_compose(invert_automorphism(ops[k]), phi.forward));
        if (!factors.empty()) {
            HomMatrix merged = hom_compose(f, factors.back());
            if (touched_slots(merged, local).size() <= 2) {
                factors.back() = merged;
                continue;
            }
        }
        factors.push_back(std::move(f));
    }
    return factors;
}

}  // namespace gcliff

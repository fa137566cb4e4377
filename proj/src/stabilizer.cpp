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

#include "gcliff/stabilizer.hpp"

#include <map>
#include <numeric>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

namespace {

struct Echelon {
    std::vector<PauliOperator> pivots;
    std::vector<size_t> coords;  // doubled coordinate of each pivot
};

int64_t coord_value(const PauliOperator &p, size_t c) {
    const size_t r = p.x.residues().size();
    return c < r ? p.x[c] : p.z[c - r];
}

int64_t coord_order(const Group &full, size_t c) { return full.order(c % full.rank()); }

PauliOperator combine(const PauliOperator &a, int64_t ka, const PauliOperator &b, int64_t kb) {
    return pauli_mul(pauli_pow(a, ka), pauli_pow(b, kb));
}

bool vec_is_zero(const PauliOperator &p) { return p.x.is_zero() && p.z.is_zero(); }

Echelon echelon(const Group &full, const std::vector<PauliOperator> &gens) {
    std::vector<PauliOperator> active;
    auto keep = [&](const PauliOperator &p) {
        if (vec_is_zero(p)) {
            require(p.phase.is_zero(), ErrorCode::InternalReductionFailure,
                    "stabilizer generators produce the nontrivial phase " + p.phase.str());
            return;
        }
        active.push_back(p);
    };
    for (const PauliOperator &p : gens) {
        keep(p);
    }
    Echelon out;
    const size_t coords = 2 * full.rank();
    for (size_t c = 0; c < coords && !active.empty(); c++) {
        const int64_t q = coord_order(full, c);
        std::optional<size_t> piv;
        for (size_t k = 0; k < active.size(); k++) {
            const int64_t b = coord_value(active[k], c);
            if (b == 0) {
                continue;
            }
            if (!piv) {
                piv = k;
                continue;
            }
            const int64_t a = coord_value(active[*piv], c);
            const BezoutResult bz = bezout(a, b);
            PauliOperator np = combine(active[*piv], bz.x, active[k], bz.y);
            PauliOperator no = combine(active[*piv], -(b / bz.g), active[k], a / bz.g);
            active[*piv] = std::move(np);
            active[k] = std::move(no);
        }
        if (!piv) {
            continue;
        }
        PauliOperator p = active[*piv];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(*piv));
        std::vector<PauliOperator> rest;
        rest.swap(active);
        for (PauliOperator &r : rest) {
            keep(r);
        }
        keep(pauli_pow(p, q / std::gcd(coord_value(p, c), q)));
        out.pivots.push_back(std::move(p));
        out.coords.push_back(c);
    }
    for (const PauliOperator &p : active) {
        require(vec_is_zero(p) && p.phase.is_zero(), ErrorCode::InternalReductionFailure,
                "echelon left a nonzero generator");
    }
    return out;
}

// Multiplicity of each prime in a product of integers.
void add_factors(std::map<int64_t, int64_t> &acc, int64_t n, int64_t times) {
    for (const auto &[p, e] : factorize(n)) {
        acc[p] += static_cast<int64_t>(e) * times;
    }
}

std::vector<size_t> nonzero_generators(const StabilizerState &s) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < s.generators.size(); i++) {
        if (!vec_is_zero(s.generators[i])) {
            idx.push_back(i);
        }
    }
    return idx;
}

PauliOperator product_of_powers(const StabilizerState &s, const std::vector<size_t> &idx,
                                const std::vector<int64_t> &coeffs) {
    PauliOperator acc = PauliOperator::identity(s.full());
    for (size_t j = 0; j < idx.size(); j++) {
        if (coeffs[j] != 0) {
            acc = pauli_mul(acc, pauli_pow(s.generators[idx[j]], coeffs[j]));
        }
    }
    return acc;
}

Group order_group(const StabilizerState &s, const std::vector<size_t> &idx) {
    std::vector<int64_t> orders;
    for (size_t i : idx) {
        orders.push_back(vec_order(s.generators[i].vec()));
    }
    return Group(orders);
}

HomMatrix vector_map(const StabilizerState &s, const std::vector<size_t> &idx) {
    const Group dbl = doubled_group(s.full());
    std::vector<std::vector<int64_t>> rows(dbl.rank(), std::vector<int64_t>(idx.size()));
    for (size_t j = 0; j < idx.size(); j++) {
        const GroupElement e = vec_to_element(s.generators[idx[j]].vec());
        for (size_t i = 0; i < dbl.rank(); i++) {
            rows[i][j] = e[i];
        }
    }
    return HomMatrix(order_group(s, idx), dbl, rows);
}

int64_t scaled_beta(const PauliVector &v, const PauliVector &w, int64_t m) {
    const PhaseRational b = beta(v, w);
    require(m % b.den() == 0, ErrorCode::InternalReductionFailure, "commutation phase finer than observable order");
    return mod(b.num() * (m / b.den()), m);
}

}  // namespace

StabilizerState stabilizer_zero(const Group &local, size_t n) {
    StabilizerState s{local, n, {}};
    const Group full = s.full();
    for (size_t i = 0; i < full.rank(); i++) {
        s.generators.push_back(PauliOperator::z_op(Character(GroupElement::basis(full, i))));
    }
    return s;
}

void stabilizer_apply(StabilizerState &s, const CliffordTableau &t, const std::vector<size_t> &slots) {
    require(t.group == s.local.power(slots.size()), ErrorCode::GroupMismatch, "stabilizer_apply: group mismatch");
    for (PauliOperator &g : s.generators) {
        g = replace_slots(g, s.local, slots, conjugate(t, restrict_slots(g, s.local, slots)));
    }
}

void stabilizer_apply(StabilizerState &s, const Gate &gate, const std::vector<size_t> &slots) {
    stabilizer_apply(s, gate_tableau(gate), slots);
}

std::optional<PauliOperator> stabilizer_element(const StabilizerState &s, const PauliVector &v) {
    if (v.is_zero()) {
        return PauliOperator::identity(s.full());
    }
    const std::vector<size_t> idx = nonzero_generators(s);
    if (idx.empty()) {
        return std::nullopt;
    }
    const HomSolver solver(vector_map(s, idx));
    const auto pre = solver.preimage(vec_to_element(v));
    if (!pre) {
        return std::nullopt;
    }
    return product_of_powers(s, idx, pre->residues());
}

OutcomeLaw measurement_law(const StabilizerState &s, const PauliVector &v) {
    require(v.group() == s.full(), ErrorCode::GroupMismatch, "measurement_law: observable group mismatch");
    const PauliOperator obs = normalized_observable(v);
    const int64_t m = vec_order(v);
    if (m == 1) {
        return OutcomeLaw{1, 0, 1, 1};
    }
    int64_t g = m;
    for (const PauliOperator &gen : s.generators) {
        g = std::gcd(g, scaled_beta(v, gen.vec(), m));
    }
    const int64_t t = m / g;
    const auto st = stabilizer_element(s, vec_scale(v, t));
    require(st.has_value(), ErrorCode::InternalReductionFailure,
            "a power of the observable commuting with the stabilizer is not in it");
    const PhaseRational lambda = pauli_pow(obs, t).phase - st->phase;
    require(g % lambda.den() == 0, ErrorCode::InternalReductionFailure, "inconsistent eigenvalue of observable power");
    const int64_t first = mod(lambda.num() * (g / lambda.den()), g);
    return OutcomeLaw{m, first, g, t};
}

StabilizerState measurement_project(const StabilizerState &s, const PauliVector &v, int64_t k) {
    const OutcomeLaw law = measurement_law(s, v);
    k = mod(k, law.order);
    require(mod(k - law.first, law.step) == 0, ErrorCode::InvalidArgument,
            "measurement outcome " + std::to_string(k) + " has probability zero");
    if (law.deterministic()) {
        return s;
    }
    const int64_t m = law.order;
    const std::vector<size_t> idx = nonzero_generators(s);
    std::vector<int64_t> row;
    for (size_t i : idx) {
        row.push_back(scaled_beta(v, s.generators[i].vec(), m));
    }
    const HomMatrix a(order_group(s, idx), Group({m}), {row});
    std::vector<PauliOperator> gens;
    for (const GroupElement &c : HomSolver(a).kernel()) {
        gens.push_back(product_of_powers(s, idx, c.residues()));
    }
    const PauliOperator obs = normalized_observable(v);
    gens.push_back(PauliOperator(obs.phase - PhaseRational(k, m), obs.vec()));
    StabilizerState out{s.local, s.n, reduce_generators(s.full(), gens)};
    return out;
}

std::pair<int64_t, StabilizerState> measure_pauli(const StabilizerState &s, const PauliVector &v,
                                                   std::mt19937_64 &rng) {
    const OutcomeLaw law = measurement_law(s, v);
    int64_t j = 0;
    if (!law.deterministic()) {
        std::uniform_int_distribution<int64_t> dist(0, law.count - 1);
        j = dist(rng);
    }
    const int64_t k = mod(law.first + j * law.step, law.order);
    return {k, measurement_project(s, v, k)};
}

std::vector<PauliOperator> reduce_generators(const Group &full, const std::vector<PauliOperator> &gens) {
    return echelon(full, gens).pivots;
}

std::string stabilizer_invariant_failure(const StabilizerState &s) {
    const Group full = s.full();
    for (size_t i = 0; i < s.generators.size(); i++) {
        if (s.generators[i].group() != full) {
            return "generator " + std::to_string(i) + " has the wrong group";
        }
        for (size_t j = i + 1; j < s.generators.size(); j++) {
            if (!beta(s.generators[i].vec(), s.generators[j].vec()).is_zero()) {
                return "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
            }
        }
    }
    Echelon e;
    try {
        e = echelon(full, s.generators);
    } catch (const Error &err) {
        return err.what();
    }
    std::map<int64_t, int64_t> have, want;
    for (size_t k = 0; k < e.pivots.size(); k++) {
        const int64_t q = coord_order(full, e.coords[k]);
        add_factors(have, q / std::gcd(coord_value(e.pivots[k], e.coords[k]), q), 1);
    }
    for (int64_t q : s.local.orders()) {
        add_factors(want, q, static_cast<int64_t>(s.n));
    }
    if (have != want) {
        return "stabilizer group does not have order |G|^n";
    }
    return "";
}

}  // namespace gcliff

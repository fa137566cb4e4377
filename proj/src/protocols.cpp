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

#include "gcliff/protocols.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <unordered_set>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"
#include "gcliff/simulate.hpp"
#include "gcliff/symplectic.hpp"

namespace gcliff {

namespace {

constexpr size_t kMaxListedFailures = 20;

void record_failure(ProtocolReport &r, const std::string &msg) {
    if (r.failures.size() < kMaxListedFailures) {
        r.failures.push_back(msg);
    } else if (r.failures.size() == kMaxListedFailures) {
        r.failures.push_back("further failures omitted");
    }
}

std::string elem_str(const GroupElement &e) {
    std::string s = "(";
    for (size_t i = 0; i < e.residues().size(); i++) {
        s += (i ? "," : "") + std::to_string(e[i]);
    }
    return s + ")";
}

std::vector<PauliVector> per_factor(const Group &local, size_t copies, bool x_type) {
    std::vector<PauliVector> obs;
    const Group k = local.power(copies);
    for (size_t j = 0; j < local.rank(); j++) {
        std::vector<int64_t> r(k.rank(), 0);
        for (size_t c = 0; c < copies; c++) {
            r[c * local.rank() + j] = 1;
        }
        const GroupElement e(k, r);
        obs.push_back(x_type ? PauliVector(e, Character::trivial(k)) : PauliVector(GroupElement::zero(k), Character(e)));
    }
    return obs;
}

/// Phase c with a = c b, for unit vectors equal up to phase.
cplx overlap_phase(const std::vector<cplx> &expect, const std::vector<cplx> &got) {
    cplx acc = 0;
    for (size_t i = 0; i < expect.size(); i++) {
        acc += std::conj(expect[i]) * got[i];
    }
    return acc;
}

bool near(cplx a, cplx b) { return std::abs(a - b) <= kStateTolerance; }

ProtocolReport make_report(std::string name, std::string group) {
    ProtocolReport r;
    r.name = std::move(name);
    r.group = std::move(group);
    return r;
}

}  // namespace

void ProtocolReport::add_phase(cplx c) {
    for (const cplx &p : phases) {
        if (near(p, c)) {
            return;
        }
    }
    phases.push_back(c);
}

Circuit build_cx_protocol(const Group &g) {
    Circuit c{g, 3, {}};
    c.ops.push_back(PrepareOp{1, std::nullopt});
    c.ops.push_back(GateOp{FourierGate{HomMatrix::identity(g)}, {1}});
    c.ops.push_back(MeasureOp{{0, 1}, per_factor(g, 2, false), "p"});
    c.ops.push_back(MeasureOp{{1, 2}, per_factor(g, 2, true), "chi"});
    c.ops.push_back(MeasureOp{{1}, per_factor(g, 1, false), "q"});
    c.ops.push_back(CorrectOp{"cx-fix-0", {"chi"}, {0}, std::nullopt});
    c.ops.push_back(CorrectOp{"cx-fix-1", {"q"}, {1}, std::nullopt});
    c.ops.push_back(CorrectOp{"cx-fix-2", {"p", "q"}, {2}, std::nullopt});
    return c;
}

ProtocolReport check_cx_protocol(const Group &g, uint64_t cap) {
    ProtocolReport r = make_report("cx", g.literal());
    const Circuit c = build_cx_protocol(g);
    const auto elems = enumerate_elements(g);
    const GroupElement zero = GroupElement::zero(g);
    std::map<std::string, cplx> phase_of;
    for (const GroupElement &a : elems) {
        for (const GroupElement &b : elems) {
            r.cases++;
            const DenseState in = dense_basis_state(g, {a, zero, b}, cap);
            const DenseState expect = dense_basis_state(g, {a, zero, a + b}, cap);
            double total = 0;
            for (const DenseBranch &br : dense_branches(c, in, cap)) {
                r.branch_count++;
                total += br.probability;
                const cplx ph = overlap_phase(expect.amp, br.state.amp);
                const std::string key = record_key(br.record);
                if (std::abs(ph) < 1.0 - kStateTolerance) {
                    record_failure(r, "input " + elem_str(a) + "," + elem_str(b) + " branch " + key +
                                          ": output is not CX(input)");
                    continue;
                }
                r.add_phase(ph);
                auto [it, fresh] = phase_of.emplace(key, ph);
                if (!fresh && !near(it->second, ph)) {
                    record_failure(r, "branch " + key + ": phase depends on the input");
                }
            }
            if (std::abs(total - 1.0) > kStateTolerance) {
                record_failure(r, "input " + elem_str(a) + "," + elem_str(b) + ": branch probabilities sum to " +
                                      std::to_string(total));
            }
        }
    }
    return r;
}

PhaseTable t_gate_table() {
    return PhaseTable{{{0}, PhaseRational(0, 1)}, {{1}, PhaseRational(1, 8)}};
}

PhaseTable cubic_table(const Group &g) {
    for (int64_t q : g.orders()) {
        require(q == 3, ErrorCode::InvalidArgument, "cubic_table needs every factor to have order 3");
    }
    PhaseTable t;
    for (const GroupElement &e : enumerate_elements(g)) {
        PhaseRational v;
        for (int64_t x : e.residues()) {
            v = v + PhaseRational(x * x * x, 9);
        }
        t[e.residues()] = v;
    }
    return t;
}

QuadraticForm standard_form(const Group &g) {
    std::vector<int64_t> diag;
    for (int64_t q : g.orders()) {
        diag.push_back(q % 2 == 0 ? 1 : 2);
    }
    return QuadraticForm::diagonal(g, diag);
}

MagicInjection build_magic_injection(const Group &g, const PhaseTable &xi) {
    check_table(g, xi);
    for (const GroupElement &k : enumerate_elements(g)) {
        if (!is_quadratic_table(g, polarization_table(g, xi, k))) {
            fail(ErrorCode::PreconditionFailed,
                 "the correction for k = " + elem_str(k) + " is not a quadratic phase, so it is not a Clifford gate");
        }
    }
    const Group g2 = g.power(2);
    // CX^dagger: (a, x) -> (a, x - a).
    std::vector<std::vector<int64_t>> rows(g2.rank(), std::vector<int64_t>(g2.rank(), 0));
    const size_t d = g.rank();
    for (size_t i = 0; i < d; i++) {
        rows[i][i] = 1;
        rows[d + i][d + i] = 1;
        rows[d + i][i] = g.order(i) - 1;
    }
    MagicInjection m{Circuit{g, 2, {}}, magic_vector(g, xi)};
    m.circuit.ops.push_back(PrepareOp{1, xi});
    m.circuit.ops.push_back(GateOp{AutomorphismGate{HomMatrix(g2, g2, rows)}, {0, 1}});
    m.circuit.ops.push_back(MeasureOp{{1}, per_factor(g, 1, false), "k"});
    m.circuit.ops.push_back(CorrectOp{"magic-fix", {"k"}, {0}, xi});
    return m;
}

ProtocolReport check_magic_injection(const Group &g, const PhaseTable &xi, uint64_t cap) {
    ProtocolReport r = make_report("magic", g.literal());
    const MagicInjection m = build_magic_injection(g, xi);
    const uint64_t q = g.size();
    std::vector<std::vector<cplx>> inputs;
    for (uint64_t k = 0; k < q; k++) {
        std::vector<cplx> v(q, cplx(0));
        v[k] = 1.0;
        inputs.push_back(v);
    }
    inputs.emplace_back(q, cplx(1.0 / std::sqrt(static_cast<double>(q))));
    std::mt19937_64 rng(20260101);
    std::normal_distribution<double> nd;
    std::vector<cplx> rnd(q);
    double nrm = 0;
    for (cplx &a : rnd) {
        a = cplx(nd(rng), nd(rng));
        nrm += std::norm(a);
    }
    for (cplx &a : rnd) {
        a /= std::sqrt(nrm);
    }
    inputs.push_back(rnd);

    std::vector<cplx> diag(q);
    for (const GroupElement &e : enumerate_elements(g)) {
        diag[element_index(e)] = xi.at(e.residues()).to_complex();
    }
    std::map<std::string, cplx> phase_of;
    for (size_t in_idx = 0; in_idx < inputs.size(); in_idx++) {
        r.cases++;
        const auto &psi = inputs[in_idx];
        DenseState init{g, 2, std::vector<cplx>(q * q, cplx(0))};
        for (uint64_t a = 0; a < q; a++) {
            init.amp[a * q] = psi[a];
        }
        double total = 0;
        for (const DenseBranch &br : dense_branches(m.circuit, init, cap)) {
            r.branch_count++;
            total += br.probability;
            const uint64_t k = element_index(register_element(g, br.record.at("k")));
            std::vector<cplx> expect(q * q, cplx(0));
            for (uint64_t a = 0; a < q; a++) {
                expect[a * q + k] = diag[a] * psi[a];
            }
            const cplx ph = overlap_phase(expect, br.state.amp);
            const std::string key = record_key(br.record);
            if (std::abs(ph) < 1.0 - kStateTolerance) {
                record_failure(r, "input " + std::to_string(in_idx) + " branch " + key + ": output is not S_xi(input)");
                continue;
            }
            r.add_phase(ph);
            auto [it, fresh] = phase_of.emplace(key, ph);
            if (!fresh && !near(it->second, ph)) {
                record_failure(r, "branch " + key + ": phase depends on the input");
            }
        }
        if (std::abs(total - 1.0) > kStateTolerance) {
            record_failure(r, "input " + std::to_string(in_idx) + ": branch probabilities sum to " +
                                  std::to_string(total));
        }
    }
    return r;
}

ProtocolReport check_triple_identity(const QuadraticForm &xi) {
    const Group &g = xi.group();
    ProtocolReport r = make_report("triple", g.literal());
    r.cases = 1;
    const HomMatrix i = i_xi_matrix(xi);
    const DenseMatrix f = dense_gate(FourierGate{i});
    const DenseMatrix s = dense_gate(QuadraticGate{xi});
    const DenseMatrix fs = matmul(f, s);
    const DenseMatrix cube = matmul(fs, matmul(fs, fs));
    cplx gauss = 0;
    for (const GroupElement &h : enumerate_elements(g)) {
        gauss += quad_eval(xi, h).to_complex();
    }
    gauss /= std::sqrt(static_cast<double>(g.size()));
    const auto scalar = proportional_phase(cube, DenseMatrix::identity(g.size()));
    if (!scalar) {
        record_failure(r, "(F S)^3 is not a scalar matrix");
    } else {
        r.add_phase(*scalar);
        if (std::abs(*scalar - gauss) > kStateTolerance) {
            record_failure(r, "(F S)^3 scalar differs from the normalized Gauss sum");
        }
    }
    if (std::abs(std::abs(gauss) - 1.0) > kStateTolerance) {
        record_failure(r, "normalized Gauss sum does not have modulus one");
    }
    const DenseMatrix neg = dense_gate(AutomorphismGate{hom_negate(HomMatrix::identity(g))});
    if (max_abs_diff(matmul(f, f), neg) > kGateTolerance) {
        record_failure(r, "F^2 is not the negation gate");
    }
    return r;
}

Circuit build_split_fourier(const QuadraticForm &xi, const Group &h, const HomMatrix &i_h) {
    const Group &g = xi.group();
    require(is_nondegenerate(xi), ErrorCode::DegenerateForm, "split Fourier needs a nondegenerate form");
    require(i_h.source() == h && i_h.target() == h && is_automorphism(i_h), ErrorCode::InvalidArgument,
            "i_h must be an isomorphism of H");
    const Group gh = group_product(g, h);
    const Gate s = QuadraticGate{extend_by_zero(xi, h, true)};
    const Gate f = FourierGate{hom_direct_sum(i_xi_matrix(xi), i_h)};
    const Gate a = AutomorphismGate{hom_direct_sum(HomMatrix::identity(g), hom_negate(HomMatrix::identity(h)))};
    Circuit c{gh, 1, {}};
    for (const Gate &gate : {s, f, s, f, s, a}) {
        c.ops.push_back(GateOp{gate, {0}});
    }
    return c;
}

ProtocolReport check_split_fourier(const QuadraticForm &xi, const Group &h, const HomMatrix &i_h) {
    const Group &g = xi.group();
    ProtocolReport r = make_report("split-fourier", g.literal() + "|" + h.literal());
    r.cases = 1;
    const Circuit c = build_split_fourier(xi, h, i_h);
    GateSequence seq;
    for (const Operation &op : c.ops) {
        seq.push_back(std::get<GateOp>(op).gate);
    }
    const DenseMatrix u = dense_sequence(c.local, seq);
    const HomMatrix i_bar = hom_compose(i_xi_matrix(xi), hom_negate(HomMatrix::identity(g)));
    const DenseMatrix fg = dense_gate(FourierGate{i_bar});
    const uint64_t nh = h.size();
    DenseMatrix expect(g.size() * nh);
    for (uint64_t a = 0; a < g.size(); a++) {
        for (uint64_t b = 0; b < g.size(); b++) {
            for (uint64_t k = 0; k < nh; k++) {
                expect.at(a * nh + k, b * nh + k) = fg.at(a, b);
            }
        }
    }
    const auto ph = proportional_phase(u, expect);
    if (!ph) {
        record_failure(r, "circuit is not F (x) I up to phase");
    } else {
        r.add_phase(*ph);
    }
    return r;
}

namespace {

const Group &cx_group() {
    static const Group g({2, 4});
    return g;
}

// Rows and columns of the Z_2 and Z_4 coordinates of (Z_2 x Z_4)^2.
constexpr size_t kA[2] = {0, 2};
constexpr size_t kB[2] = {1, 3};

std::vector<HomMatrix> automorphisms_of_g() {
    const Group &g = cx_group();
    std::vector<HomMatrix> out;
    for (int64_t a = 0; a < 2; a++) {
        for (int64_t b = 0; b < 2; b++) {
            for (int64_t c = 0; c < 4; c++) {
                for (int64_t d = 0; d < 4; d++) {
                    if (mod(c * 2, 4) != 0) {
                        continue;
                    }
                    HomMatrix m(g, g, {{a, b}, {c, d}});
                    if (is_automorphism(m)) {
                        out.push_back(m);
                    }
                }
            }
        }
    }
    return out;
}

using Block = std::array<int64_t, 4>;

Block block_mod2(const HomMatrix &psi, const size_t *idx) {
    return {psi.at(idx[0], idx[0]) % 2, psi.at(idx[0], idx[1]) % 2, psi.at(idx[1], idx[0]) % 2,
            psi.at(idx[1], idx[1]) % 2};
}

Block mul2(const Block &x, const Block &y) {
    return {(x[0] * y[0] + x[1] * y[2]) % 2, (x[0] * y[1] + x[1] * y[3]) % 2, (x[2] * y[0] + x[3] * y[2]) % 2,
            (x[2] * y[1] + x[3] * y[3]) % 2};
}

}  // namespace

bool cx_invariant_holds(const HomMatrix &psi) {
    require(psi.source() == cx_group().power(2), ErrorCode::InvalidArgument,
            "the invariant is defined on automorphisms of (Z_2 x Z_4)^2");
    return block_mod2(psi, kA) == block_mod2(psi, kB);
}

std::vector<HomMatrix> cx_subgroup_generators() {
    const Group &g = cx_group();
    const Group g2 = g.power(2);
    const HomMatrix id = HomMatrix::identity(g);
    std::vector<HomMatrix> gens;
    for (const HomMatrix &a : automorphisms_of_g()) {
        gens.push_back(hom_direct_sum(a, id));
        gens.push_back(hom_direct_sum(id, a));
    }
    // (g, h) -> (g, g + h) and (g, h) -> (g + h, h).
    gens.push_back(HomMatrix(g2, g2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
    gens.push_back(HomMatrix(g2, g2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    return gens;
}

HomMatrix cx_target_map() {
    const Group g2 = cx_group().power(2);
    return HomMatrix(g2, g2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
}

ProtocolReport cx_insufficiency_certificate(bool run_bfs, uint64_t cap) {
    ProtocolReport r = make_report("cx-insufficiency", cx_group().literal());
    const Group g2 = cx_group().power(2);
    const auto autos = automorphisms_of_g();
    r.notes.push_back("|Aut(Z2 x Z4)| = " + std::to_string(autos.size()));
    const auto gens = cx_subgroup_generators();
    r.notes.push_back("generators: " + std::to_string(gens.size()));

    // (a) generators satisfy the invariant.
    for (size_t k = 0; k < gens.size(); k++) {
        r.cases++;
        if (!cx_invariant_holds(gens[k])) {
            record_failure(r, "generator " + std::to_string(k) + " violates the invariant");
        }
    }

    // (b) closure. Every well-defined entry from a Z_2 coordinate to a Z_4
    // coordinate is even, so the mod-2 AA and BB blocks of a composite are
    // the products of the blocks; the invariant is the equalizer of two
    // homomorphisms into GL_2(F_2) and hence a subgroup.
    for (int64_t x = 0; x < 4; x++) {
        if (mod(2 * x, 4) == 0 && x % 2 != 0) {
            record_failure(r, "odd well-defined entry from Z_2 to Z_4");
        }
    }
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 500; trial++) {
        r.cases++;
        const HomMatrix p = random_automorphism(g2, rng);
        const HomMatrix q = random_automorphism(g2, rng);
        const HomMatrix pq = hom_compose(p, q);
        const HomMatrix pinv = invert_automorphism(p);
        bool ok = true;
        for (const size_t *idx : {kA, kB}) {
            ok = ok && block_mod2(pq, idx) == mul2(block_mod2(p, idx), block_mod2(q, idx));
            ok = ok && mul2(block_mod2(pinv, idx), block_mod2(p, idx)) == Block{1, 0, 0, 1};
        }
        if (!ok) {
            record_failure(r, "mod-2 block map is not multiplicative on a random pair");
        }
    }
    for (const HomMatrix &a : gens) {
        for (const HomMatrix &b : gens) {
            r.cases++;
            if (!cx_invariant_holds(hom_compose(a, b))) {
                record_failure(r, "product of two generators violates the invariant");
            }
        }
        if (!cx_invariant_holds(invert_automorphism(a))) {
            record_failure(r, "inverse of a generator violates the invariant");
        }
    }

    // (c) the target map violates it.
    r.cases++;
    if (cx_invariant_holds(cx_target_map())) {
        record_failure(r, "the target map satisfies the invariant");
    }
    if (!cx_invariant_holds(HomMatrix::identity(g2))) {
        record_failure(r, "the identity violates the invariant");
    }

    // (d) breadth-first closure on packed matrices.
    if (run_bfs) {
        auto pack = [](const HomMatrix &m) {
            uint32_t key = 0;
            for (size_t i = 0; i < 4; i++) {
                for (size_t j = 0; j < 4; j++) {
                    key = (key << 2) | static_cast<uint32_t>(m.at(i, j));
                }
            }
            return key;
        };
        const int64_t orders[4] = {2, 4, 2, 4};
        auto compose = [&](uint32_t gk, uint32_t mk) {
            int64_t a[4][4], b[4][4];
            for (int i = 3; i >= 0; i--) {
                for (int j = 3; j >= 0; j--) {
                    a[i][j] = gk & 3;
                    b[i][j] = mk & 3;
                    gk >>= 2;
                    mk >>= 2;
                }
            }
            uint32_t key = 0;
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    int64_t acc = 0;
                    for (int k = 0; k < 4; k++) {
                        acc += a[i][k] * b[k][j];
                    }
                    key = (key << 2) | static_cast<uint32_t>(acc % orders[i]);
                }
            }
            return key;
        };
        std::vector<uint32_t> gen_keys;
        for (const HomMatrix &m : gens) {
            gen_keys.push_back(pack(m));
        }
        const uint32_t target = pack(cx_target_map());
        std::unordered_set<uint32_t> seen{pack(HomMatrix::identity(g2))};
        std::vector<uint32_t> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<uint32_t> next;
            for (uint32_t m : frontier) {
                for (uint32_t gk : gen_keys) {
                    const uint32_t p = compose(gk, m);
                    if (seen.insert(p).second) {
                        next.push_back(p);
                        if (seen.size() > cap) {
                            throw Error(ErrorCode::CapExceeded, "closure exceeded the cap of " +
                                                                    std::to_string(cap) + " elements (partial size " +
                                                                    std::to_string(seen.size()) + ")");
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        r.branch_count = seen.size();
        r.notes.push_back("closure size: " + std::to_string(seen.size()));
        if (seen.count(target)) {
            record_failure(r, "the closure contains the target map");
        }
    }
    return r;
}

}  // namespace gcliff

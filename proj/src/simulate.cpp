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

#include "gcliff/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

namespace {

/// Eigenspace projections of a normalized observable on the full register:
/// P_k psi = (1/m) sum_j e^{-2 pi i jk/m} O^j psi.
std::vector<std::vector<cplx>> eigen_projections(const DenseState &s, const PauliOperator &obs, int64_t m) {
    std::vector<std::vector<cplx>> powers(static_cast<size_t>(m));
    powers[0] = s.amp;
    DenseState cur = s;
    for (int64_t j = 1; j < m; j++) {
        cur.amp = dense_apply_pauli(cur, obs);
        powers[static_cast<size_t>(j)] = cur.amp;
    }
    std::vector<std::vector<cplx>> proj(static_cast<size_t>(m), std::vector<cplx>(s.amp.size(), cplx(0)));
    for (int64_t k = 0; k < m; k++) {
        for (int64_t j = 0; j < m; j++) {
            const cplx w = std::polar(1.0 / static_cast<double>(m),
                                      -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m));
            const auto &pj = powers[static_cast<size_t>(j)];
            auto &out = proj[static_cast<size_t>(k)];
            for (size_t i = 0; i < out.size(); i++) {
                out[i] += w * pj[i];
            }
        }
    }
    return proj;
}

double norm2(const std::vector<cplx> &v) {
    double acc = 0;
    for (const cplx &a : v) {
        acc += std::norm(a);
    }
    return acc;
}

void prepare_dense(DenseState &s, const PrepareOp &op) {
    const SlotLayout layout = s.layout();
    const uint64_t stride = layout.stride(op.slot);
    const uint64_t q = layout.slot_dim;
    double stray = 0;
    for (uint64_t i = 0; i < s.amp.size(); i++) {
        if ((i / stride) % q != 0) {
            stray += std::norm(s.amp[i]);
        }
    }
    require(stray < kBranchCutoff, ErrorCode::InvalidArgument,
            "prepare on slot " + std::to_string(op.slot) + " which is not in |0>");
    if (!op.magic) {
        return;
    }
    const std::vector<cplx> v = magic_vector(s.local, *op.magic);
    std::vector<cplx> out(s.amp.size(), cplx(0));
    for (uint64_t i = 0; i < s.amp.size(); i++) {
        if ((i / stride) % q != 0) {
            continue;
        }
        for (uint64_t g = 0; g < q; g++) {
            out[i + g * stride] = v[g] * s.amp[i];
        }
    }
    s.amp = std::move(out);
}

struct DenseOutcome {
    std::vector<cplx> amp;
    double prob;
    int64_t k;
};

/// Nonzero outcomes of one observable measured on `s`.
std::vector<DenseOutcome> dense_measure(const DenseState &s, const Circuit &c, const MeasureOp &m,
                                        const PauliVector &v, int64_t &order) {
    const PauliOperator local_obs = normalized_observable(v);
    order = vec_order(v);
    const PauliOperator obs = place(local_obs, c.local, m.slots, c.n);
    std::vector<DenseOutcome> out;
    auto proj = eigen_projections(s, obs, order);
    for (int64_t k = 0; k < order; k++) {
        auto &p = proj[static_cast<size_t>(k)];
        const double pr = norm2(p);
        if (pr < kBranchCutoff) {
            continue;
        }
        const double scale = 1.0 / std::sqrt(pr);
        for (cplx &a : p) {
            a *= scale;
        }
        out.push_back(DenseOutcome{std::move(p), pr, k});
    }
    return out;
}

/// Runs the circuit on the dense backend. `choose` picks the outcome index
/// among the nonzero ones, or -1 to keep them all.
template <typename Choose>
std::vector<DenseBranch> dense_engine(const Circuit &c, const std::optional<DenseState> &initial, uint64_t cap,
                                      Choose choose) {
    validate_circuit(c);
    DenseState start = initial ? *initial : dense_zero_state(c.local, c.n, cap);
    require(start.local == c.local && start.n == c.n, ErrorCode::InvalidArgument,
            "initial state does not match the circuit");
    require(start.amp.size() <= cap, ErrorCode::CapExceeded, "dense state exceeds cap");
    std::vector<DenseBranch> branches{DenseBranch{{}, std::move(start), 1.0}};
    for (const Operation &op : c.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            const DenseMatrix u = dense_gate(g->gate, cap);
            for (DenseBranch &b : branches) {
                dense_apply(b.state, u, g->slots);
            }
        } else if (const auto *f = std::get_if<CorrectOp>(&op)) {
            for (DenseBranch &b : branches) {
                dense_apply(b.state, dense_gate(correction_gate(c.local, *f, b.record), cap), f->slots);
            }
        } else if (const auto *p = std::get_if<PrepareOp>(&op)) {
            for (DenseBranch &b : branches) {
                prepare_dense(b.state, *p);
            }
        } else {
            const auto &m = std::get<MeasureOp>(op);
            for (DenseBranch &b : branches) {
                b.record[m.reg] = RegisterValue{};
            }
            for (const PauliVector &v : m.observables) {
                std::vector<DenseBranch> next;
                for (DenseBranch &b : branches) {
                    int64_t order = 1;
                    std::vector<DenseOutcome> outs = dense_measure(b.state, c, m, v, order);
                    const int pick = choose(outs);
                    for (size_t i = 0; i < outs.size(); i++) {
                        if (pick >= 0 && static_cast<size_t>(pick) != i) {
                            continue;
                        }
                        DenseBranch nb{b.record, DenseState{c.local, c.n, std::move(outs[i].amp)},
                                       pick >= 0 ? b.probability : b.probability * outs[i].prob};
                        RegisterValue &r = nb.record[m.reg];
                        r.outcomes.push_back(outs[i].k);
                        r.orders.push_back(order);
                        next.push_back(std::move(nb));
                    }
                }
                branches = std::move(next);
            }
        }
    }
    return branches;
}

}  // namespace

std::vector<cplx> magic_vector(const Group &local, const PhaseTable &xi) {
    check_table(local, xi);
    const double norm = 1.0 / std::sqrt(static_cast<double>(local.size()));
    std::vector<cplx> v(local.size());
    for (const GroupElement &g : enumerate_elements(local)) {
        v[element_index(g)] = norm * xi.at(g.residues()).to_complex();
    }
    return v;
}

std::vector<DenseBranch> dense_branches(const Circuit &c, const std::optional<DenseState> &initial, uint64_t cap) {
    return dense_engine(c, initial, cap, [](const std::vector<DenseOutcome> &) { return -1; });
}

std::pair<DenseState, MeasurementRecord> dense_run(const Circuit &c, uint64_t seed,
                                                   const std::optional<DenseState> &initial, uint64_t cap) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](const std::vector<DenseOutcome> &outs) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double total = 0;
        for (const auto &o : outs) {
            total += o.prob;
        }
        double r = u(rng) * total;
        for (size_t i = 0; i < outs.size(); i++) {
            r -= outs[i].prob;
            if (r < 0) {
                return static_cast<int>(i);
            }
        }
        return static_cast<int>(outs.size()) - 1;
    };
    auto branches = dense_engine(c, initial, cap, pick);
    return {std::move(branches.front().state), std::move(branches.front().record)};
}

namespace {

void prepare_tableau(const StabilizerState &s, const PrepareOp &op) {
    require(!op.magic, ErrorCode::NonClifford, "the tableau backend cannot prepare magic states");
    const Group full = s.full();
    for (size_t i = 0; i < s.local.rank(); i++) {
        const PauliOperator z = PauliOperator::z_op(Character(GroupElement::basis(s.local, i)));
        const PauliVector v = place(z, s.local, {op.slot}, s.n).vec();
        const OutcomeLaw law = measurement_law(s, v);
        require(law.deterministic() && law.first == 0, ErrorCode::InvalidArgument,
                "prepare on slot " + std::to_string(op.slot) + " which is not in |0>");
    }
}

template <typename Choose>
std::vector<TableauBranch> tableau_engine(const Circuit &c, Choose choose) {
    validate_circuit(c);
    std::vector<TableauBranch> branches{TableauBranch{{}, stabilizer_zero(c.local, c.n), 1.0}};
    for (const Operation &op : c.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            const CliffordTableau t = gate_tableau(g->gate);
            for (TableauBranch &b : branches) {
                stabilizer_apply(b.state, t, g->slots);
            }
        } else if (const auto *f = std::get_if<CorrectOp>(&op)) {
            for (TableauBranch &b : branches) {
                stabilizer_apply(b.state, correction_gate(c.local, *f, b.record), f->slots);
            }
        } else if (const auto *p = std::get_if<PrepareOp>(&op)) {
            for (TableauBranch &b : branches) {
                prepare_tableau(b.state, *p);
            }
        } else {
            const auto &m = std::get<MeasureOp>(op);
            for (TableauBranch &b : branches) {
                b.record[m.reg] = RegisterValue{};
            }
            for (const PauliVector &lv : m.observables) {
                const PauliVector v = place(PauliOperator(PhaseRational(), lv), c.local, m.slots, c.n).vec();
                std::vector<TableauBranch> next;
                for (TableauBranch &b : branches) {
                    const OutcomeLaw law = measurement_law(b.state, v);
                    const int64_t pick = choose(law);
                    for (int64_t j = 0; j < law.count; j++) {
                        if (pick >= 0 && pick != j) {
                            continue;
                        }
                        const int64_t k = mod(law.first + j * law.step, law.order);
                        TableauBranch nb{b.record, measurement_project(b.state, v, k),
                                         pick >= 0 ? b.probability
                                                   : b.probability / static_cast<double>(law.count)};
                        RegisterValue &r = nb.record[m.reg];
                        r.outcomes.push_back(k);
                        r.orders.push_back(law.order);
                        next.push_back(std::move(nb));
                    }
                }
                branches = std::move(next);
            }
        }
    }
    return branches;
}

}  // namespace

std::vector<TableauBranch> tableau_branches(const Circuit &c) {
    return tableau_engine(c, [](const OutcomeLaw &) { return int64_t{-1}; });
}

std::pair<StabilizerState, MeasurementRecord> tableau_run(const Circuit &c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](const OutcomeLaw &law) {
        std::uniform_int_distribution<int64_t> d(0, law.count - 1);
        return law.count == 1 ? int64_t{0} : d(rng);
    };
    auto branches = tableau_engine(c, pick);
    return {std::move(branches.front().state), std::move(branches.front().record)};
}

bool stabilizes(const StabilizerState &s, const DenseState &psi) {
    for (const PauliOperator &g : s.generators) {
        const std::vector<cplx> out = dense_apply_pauli(psi, g);
        double diff = 0;
        for (size_t i = 0; i < out.size(); i++) {
            diff += std::norm(out[i] - psi.amp[i]);
        }
        if (std::sqrt(diff) > kStateTolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace gcliff

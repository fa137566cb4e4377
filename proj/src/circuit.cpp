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

#include "gcliff/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

std::string record_key(const MeasurementRecord &rec) {
    std::ostringstream os;
    bool first = true;
    for (const auto &[name, v] : rec) {
        os << (first ? "" : ";") << name << "=";
        first = false;
        for (size_t j = 0; j < v.outcomes.size(); j++) {
            os << (j ? "," : "") << v.outcomes[j];
        }
    }
    return os.str();
}

bool is_builtin_correction(const std::string &name) {
    return name == "cx-fix-0" || name == "cx-fix-1" || name == "cx-fix-2" || name == "magic-fix";
}

size_t builtin_arity(const std::string &name) { return name == "cx-fix-2" ? 2 : 1; }

namespace {

void check_slots(const std::vector<size_t> &slots, size_t n, const std::string &what) {
    require(!slots.empty(), ErrorCode::InvalidArgument, what + ": no slots");
    std::set<size_t> seen;
    for (size_t s : slots) {
        require(s < n, ErrorCode::InvalidArgument, what + ": slot " + std::to_string(s) + " out of range");
        require(seen.insert(s).second, ErrorCode::InvalidArgument, what + ": repeated slot");
    }
}

}  // namespace

void validate_circuit(const Circuit &c) {
    require(c.n >= 1, ErrorCode::InvalidArgument, "circuit needs at least one qudit");
    std::set<std::string> written;
    for (size_t idx = 0; idx < c.ops.size(); idx++) {
        const std::string where = "op " + std::to_string(idx);
        const Operation &op = c.ops[idx];
        if (const auto *g = std::get_if<GateOp>(&op)) {
            check_slots(g->slots, c.n, where);
            require(gate_group(g->gate) == c.local.power(g->slots.size()), ErrorCode::GroupMismatch,
                    where + ": gate group does not match its slots");
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            check_slots(m->slots, c.n, where);
            require(!m->reg.empty(), ErrorCode::InvalidArgument, where + ": empty register name");
            require(!m->observables.empty(), ErrorCode::InvalidArgument, where + ": no observables");
            const Group k = c.local.power(m->slots.size());
            for (const PauliVector &v : m->observables) {
                require(v.group() == k, ErrorCode::GroupMismatch, where + ": observable group mismatch");
            }
            for (size_t a = 0; a < m->observables.size(); a++) {
                for (size_t b = a + 1; b < m->observables.size(); b++) {
                    require(beta(m->observables[a], m->observables[b]).is_zero(), ErrorCode::InvalidArgument,
                            where + ": observables do not commute");
                }
            }
            written.insert(m->reg);
        } else if (const auto *f = std::get_if<CorrectOp>(&op)) {
            check_slots(f->slots, c.n, where);
            require(is_builtin_correction(f->function), ErrorCode::InvalidArgument,
                    where + ": unknown correction function '" + f->function + "'");
            require(f->args.size() == builtin_arity(f->function), ErrorCode::InvalidArgument,
                    where + ": wrong number of arguments for " + f->function);
            require(f->slots.size() == 1, ErrorCode::InvalidArgument, where + ": corrections act on one slot");
            for (const std::string &a : f->args) {
                require(written.count(a) > 0, ErrorCode::InvalidArgument,
                        where + ": register '" + a + "' read before it is written");
            }
            if (f->function == "magic-fix") {
                require(f->table.has_value(), ErrorCode::InvalidArgument, where + ": magic-fix needs a table");
                check_table(c.local, *f->table);
            }
        } else {
            const auto &p = std::get<PrepareOp>(op);
            require(p.slot < c.n, ErrorCode::InvalidArgument, where + ": slot out of range");
            if (p.magic) {
                check_table(c.local, *p.magic);
            }
        }
    }
}

GroupElement register_element(const Group &local, const RegisterValue &v) {
    require(v.outcomes.size() == local.rank(), ErrorCode::InvalidArgument,
            "register has " + std::to_string(v.outcomes.size()) + " outcomes, group has rank " +
                std::to_string(local.rank()));
    std::vector<int64_t> r(local.rank());
    for (size_t j = 0; j < r.size(); j++) {
        const int64_t q = local.order(j), m = v.orders[j];
        require(q % m == 0, ErrorCode::InvalidArgument, "register outcome order does not divide the group order");
        r[j] = mod(v.outcomes[j] * (q / m), q);
    }
    return GroupElement(local, r);
}

PhaseTable polarization_table(const Group &g, const PhaseTable &xi, const GroupElement &k) {
    check_table(g, xi);
    const PhaseRational xk = xi.at(k.residues());
    const PhaseRational x0 = xi.at(GroupElement::zero(g).residues());
    PhaseTable out;
    for (const GroupElement &h : enumerate_elements(g)) {
        // b(k, h) - b(k, 0) = xi(k+h) - xi(h) - xi(k) + xi(0)
        out[h.residues()] = xi.at((k + h).residues()) - xi.at(h.residues()) - xk + x0;
    }
    return out;
}

Gate correction_gate(const Group &local, const CorrectOp &op, const MeasurementRecord &rec) {
    auto reg = [&](size_t i) {
        auto it = rec.find(op.args.at(i));
        require(it != rec.end(), ErrorCode::InvalidArgument, "register '" + op.args.at(i) + "' not recorded");
        return register_element(local, it->second);
    };
    if (op.function == "cx-fix-0") {
        return PauliGate{PauliOperator::z_op(Character(reg(0)))};
    }
    if (op.function == "cx-fix-1") {
        return PauliGate{PauliOperator::x_op(-reg(0))};
    }
    if (op.function == "cx-fix-2") {
        return PauliGate{PauliOperator::x_op(reg(0) - reg(1))};
    }
    if (op.function == "magic-fix") {
        require(op.table.has_value(), ErrorCode::InvalidArgument, "magic-fix needs a table");
        PhaseTable t = polarization_table(local, *op.table, reg(0));
        for (auto &[key, val] : t) {
            val = -val;
        }
        return QuadraticGate{fit_quadratic_form(local, t)};
    }
    fail(ErrorCode::InvalidArgument, "unknown correction function '" + op.function + "'");
}

PauliOperator place(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots, size_t n) {
    const size_t d = local.rank();
    require(p.group() == local.power(slots.size()), ErrorCode::GroupMismatch, "place: operator group mismatch");
    const Group big = local.power(n);
    std::vector<int64_t> xs(big.rank(), 0), zs(big.rank(), 0);
    for (size_t k = 0; k < slots.size(); k++) {
        require(slots[k] < n, ErrorCode::InvalidArgument, "place: slot out of range");
        for (size_t i = 0; i < d; i++) {
            xs[slots[k] * d + i] = p.x[k * d + i];
            zs[slots[k] * d + i] = p.z[k * d + i];
        }
    }
    return PauliOperator(p.phase, GroupElement(big, std::move(xs)), Character(big, std::move(zs)));
}

PauliOperator restrict_slots(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots) {
    const size_t d = local.rank();
    const Group small = local.power(slots.size());
    std::vector<int64_t> xs(small.rank()), zs(small.rank());
    for (size_t k = 0; k < slots.size(); k++) {
        for (size_t i = 0; i < d; i++) {
            xs[k * d + i] = p.x[slots[k] * d + i];
            zs[k * d + i] = p.z[slots[k] * d + i];
        }
    }
    return PauliOperator(PhaseRational(), GroupElement(small, std::move(xs)), Character(small, std::move(zs)));
}

PauliOperator replace_slots(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots,
                            const PauliOperator &part) {
    const size_t d = local.rank();
    std::vector<int64_t> xs = p.x.residues(), zs = p.z.residues();
    for (size_t k = 0; k < slots.size(); k++) {
        for (size_t i = 0; i < d; i++) {
            xs[slots[k] * d + i] = part.x[k * d + i];
            zs[slots[k] * d + i] = part.z[k * d + i];
        }
    }
    return PauliOperator(p.phase + part.phase, GroupElement(p.group(), std::move(xs)),
                         Character(p.group(), std::move(zs)));
}

PauliOperator normalized_observable(const PauliVector &v) {
    const int64_t m = vec_order(v);
    const PauliOperator base(PhaseRational(), v);
    const PhaseRational c = pauli_pow(base, m).phase;
    return PauliOperator(PhaseRational(-c.num(), c.den() * m), v);
}

}  // namespace gcliff

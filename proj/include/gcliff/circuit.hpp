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

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "gcliff/clifford.hpp"

namespace gcliff {

/// A gate over local^k applied to `slots` (slots[0] is the first copy).
struct GateOp {
    Gate gate;
    std::vector<size_t> slots;
};

/// Measures each observable in turn (they must commute), each over
/// local^k on `slots`. Outcome j of the register is the exponent k_j of the
/// eigenvalue e^{2 pi i k_j / m_j} of the normalized observable.
struct MeasureOp {
    std::vector<size_t> slots;
    std::vector<PauliVector> observables;
    std::string reg;
};

/// A gate chosen by a named built-in function of recorded registers.
struct CorrectOp {
    std::string function;
    std::vector<std::string> args;
    std::vector<size_t> slots;
    /// Extra data for functions that need a phase table (magic-fix).
    std::optional<PhaseTable> table;
};

/// Puts a slot that is currently |0> into |0> or the magic state
/// |G|^{-1/2} sum_g xi(g)|g> for the given table.
struct PrepareOp {
    size_t slot;
    std::optional<PhaseTable> magic;
};

using Operation = std::variant<GateOp, MeasureOp, CorrectOp, PrepareOp>;

struct Circuit {
    Group local;
    size_t n;
    std::vector<Operation> ops;
};

/// One register: outcome exponents and the orders they are taken modulo.
struct RegisterValue {
    std::vector<int64_t> outcomes;
    std::vector<int64_t> orders;
    bool operator==(const RegisterValue &o) const { return outcomes == o.outcomes && orders == o.orders; }
    bool operator<(const RegisterValue &o) const {
        return std::tie(outcomes, orders) < std::tie(o.outcomes, o.orders);
    }
};

using MeasurementRecord = std::map<std::string, RegisterValue>;

/// Canonical text form of a record, e.g. "p=1,0;q=3".
std::string record_key(const MeasurementRecord &rec);

/// Checks slot ranges, group and arity of every op, that registers are
/// written before they are read and that correction functions exist.
void validate_circuit(const Circuit &c);

/// The group element whose residues label the register: residue j is
/// k_j * q_j / m_j, which requires m_j | q_j.
GroupElement register_element(const Group &local, const RegisterValue &v);

/// The gate (over local^{slots.size()}) selected by a correction op.
/// Built-ins:
///   cx-fix-0(chi)   Z_chi
///   cx-fix-1(q)     X_{-q}
///   cx-fix-2(p, q)  X_{p-q}
///   magic-fix(k)    S for the table g -> -(b_xi(k, g) - b_xi(k, 0)), xi the
///                   op's table, with b_xi(k, g) = xi(k+g) - xi(k) - xi(g)
Gate correction_gate(const Group &local, const CorrectOp &op, const MeasurementRecord &rec);
bool is_builtin_correction(const std::string &name);
size_t builtin_arity(const std::string &name);

/// The table g -> b_xi(k, g) - b_xi(k, 0).
PhaseTable polarization_table(const Group &g, const PhaseTable &xi, const GroupElement &k);

/// Pauli placement helpers for operators over local^n.
PauliOperator place(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots, size_t n);
/// The part of p on `slots` as an operator over local^k with phase zero.
PauliOperator restrict_slots(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots);
/// p with its `slots` part replaced by part's vector and part's phase added.
PauliOperator replace_slots(const PauliOperator &p, const Group &local, const std::vector<size_t> &slots,
                            const PauliOperator &part);

/// The observable scaled so that its m-th power is the identity, m its
/// vector order: e^{-2 pi i c/m} X_g Z_chi where (X_g Z_chi)^m = e^{2 pi i c}.
PauliOperator normalized_observable(const PauliVector &v);

}  // namespace gcliff

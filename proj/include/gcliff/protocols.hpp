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

#include <complex>
#include <string>
#include <vector>

#include "gcliff/circuit.hpp"
#include "gcliff/dense.hpp"

namespace gcliff {

/// Outcome of a protocol check: one entry in `failures` per failed case.
struct ProtocolReport {
    std::string name;
    std::string group;
    size_t branch_count = 0;
    size_t cases = 0;
    std::vector<std::string> failures;
    /// Distinct global phases seen (deduplicated within 1e-9).
    std::vector<cplx> phases;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void add_phase(cplx c);
};

/// Slots 0 (control), 1 (ancilla) and 2 (target). Registers p, chi, q hold
/// the ZZ, XX and Z outcomes as group-element residues.
Circuit build_cx_protocol(const Group &g);
/// All basis inputs |g,0,h> and all branches: output |g,0,g+h> up to a phase
/// that depends only on the branch.
ProtocolReport check_cx_protocol(const Group &g, uint64_t cap = kDefaultDenseCap);

struct MagicInjection {
    Circuit circuit;
    std::vector<cplx> magic_state;
};

/// Slot 0 carries the data, slot 1 the magic state. Throws
/// PreconditionFailed naming k when the correction for k is not quadratic.
MagicInjection build_magic_injection(const Group &g, const PhaseTable &xi);
/// Basis inputs, the uniform superposition and a seeded random input: every
/// branch leaves (S_xi psi) (x) |k> up to a phase depending only on k.
ProtocolReport check_magic_injection(const Group &g, const PhaseTable &xi, uint64_t cap = kDefaultDenseCap);

/// xi(1) = 1/8 on Z_2.
PhaseTable t_gate_table();
/// xi(g) = sum_i g_i^3 / 9 on a product of copies of Z_3 (the only cyclic
/// groups on which n^3/q^2 is well defined).
PhaseTable cubic_table(const Group &g);
/// The diagonal form with coefficient 1 on even factors and 2 on odd ones,
/// nondegenerate on every group.
QuadraticForm standard_form(const Group &g);

/// (F S)^3 is scalar with scalar |G|^{-1/2} sum_h xi(h) of modulus one, and
/// F^2 is the negation gate, for F = F_{i_xi}, S = S_xi.
ProtocolReport check_triple_identity(const QuadraticForm &xi);

/// One qudit over G x H running S, F_{i_xi (+) i_h}, S, F_{i_xi (+) i_h}, S,
/// A_{id (+) neg}, with S the form xi extended by zero on H.
Circuit build_split_fourier(const QuadraticForm &xi, const Group &h, const HomMatrix &i_h);
/// Dense check that the circuit equals F_{i_xi o neg} (x) I up to phase.
ProtocolReport check_split_fourier(const QuadraticForm &xi, const Group &h, const HomMatrix &i_h);

/// The mod-2 invariant on automorphisms of (Z_2 x Z_4)^2 separating the
/// subgroup generated by one-slot automorphisms and CX maps from the map
/// ((a0,b0),(a1,b1)) -> ((a0,b0),(a0+a1,b1)).
bool cx_invariant_holds(const HomMatrix &psi);
std::vector<HomMatrix> cx_subgroup_generators();
HomMatrix cx_target_map();
/// Certificate that the target is outside the subgroup; with run_bfs also
/// enumerates the subgroup up to `cap` elements (CapExceeded beyond it).
ProtocolReport cx_insufficiency_certificate(bool run_bfs, uint64_t cap = uint64_t{1} << 20);

}  // namespace gcliff

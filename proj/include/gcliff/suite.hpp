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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcliff/circuit.hpp"

namespace gcliff {

/// One named property check with its verdict, a one-line summary and the
/// wall time it took.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    double seconds = 0;
};

/// Every automorphism of g, by enumerating well-defined matrices.
std::vector<HomMatrix> all_automorphisms(const Group &g, uint64_t cap = 1u << 16);
/// Every quadratic form in the normalized coefficient ranges.
std::vector<QuadraticForm> all_quadratic_forms(const Group &g, uint64_t cap = 1u << 16);

/// A random circuit of generator gates on one or two slots and measurements
/// of random nonzero Pauli observables on one or two slots.
Circuit random_clifford_circuit(const Group &local, size_t n, size_t gates, size_t measurements,
                                std::mt19937_64 &rng);

/// Pauli algebra properties (unitarity, X and Z laws, commutation, dense
/// faithfulness of multiplication).
CheckResult check_pauli_algebra(const std::vector<Group> &groups);
/// Only scalars commute with every Pauli, and every unitary commuting with
/// the Paulis up to phases is a Pauli operator (solved as linear systems).
CheckResult check_pauli_centralizers(const std::vector<Group> &groups);
/// Dense U P U^dagger against the tableau for every generator gate and every
/// Pauli generator.
CheckResult check_conjugation_rules(const std::vector<Group> &groups);
/// Round trip through decompose plus the gate-count bound, over `samples`
/// random maps per group and, if requested, all of Sp over Z_2.
CheckResult check_decomposition(const std::vector<Group> &groups, int samples, bool exhaustive_z2, uint64_t seed);
/// decompose_clifford reproduces random composite tableaux.
CheckResult check_clifford_decomposition(const std::vector<Group> &groups, int samples, uint64_t seed);
/// two_local_factorize on random automorphisms of G^n for each n in copies.
CheckResult check_two_local(const std::vector<Group> &groups, const std::vector<size_t> &copies, int samples,
                            uint64_t seed);
CheckResult check_cx_protocols(const std::vector<Group> &groups);
/// The T-gate analogue on Z_2, the cubic phase on Z_3 (when listed) and
/// the rejection of a table whose corrections are not Clifford.
CheckResult check_magic_protocols(const std::vector<Group> &groups);
/// (F S)^3 and F^2 for nondegenerate forms on each group, and the split
/// Fourier circuit for each (G, H) pair.
CheckResult check_fourier_identities(const std::vector<Group> &groups,
                                     const std::vector<std::pair<Group, Group>> &split_pairs);
CheckResult check_counterexample(bool bfs);
/// Tableau outcome distributions and post-states against dense branches.
CheckResult check_backend_equivalence(const std::vector<Group> &groups, int circuits, uint64_t seed);
/// Tableau run time on a large random circuit.
CheckResult check_tableau_scaling(const Group &local, size_t n, size_t gates, double budget_seconds, uint64_t seed);
/// Hadamard, phase gate and CX on qubits.
CheckResult check_qubit_classics();

/// The checks applicable to one group, sized for an interactive run.
std::vector<CheckResult> verify_group(const Group &g, uint64_t seed);

}  // namespace gcliff

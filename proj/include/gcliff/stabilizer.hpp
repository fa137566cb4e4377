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

#include <random>
#include <string>
#include <vector>

#include "gcliff/circuit.hpp"

namespace gcliff {

/// A pure stabilizer state of n qudits over `local`, given by generators of
/// its stabilizer group (operators over local^n with exact phases).
struct StabilizerState {
    Group local;
    size_t n;
    std::vector<PauliOperator> generators;

    Group full() const { return local.power(n); }
};

/// |0...0>, stabilized by every Z character.
StabilizerState stabilizer_zero(const Group &local, size_t n);

/// U s U^dagger for every generator, U given by its tableau on `slots`.
void stabilizer_apply(StabilizerState &s, const CliffordTableau &t, const std::vector<size_t> &slots);
void stabilizer_apply(StabilizerState &s, const Gate &gate, const std::vector<size_t> &slots);

/// Outcome law of measuring the normalized observable of v (over local^n):
/// outcomes first + j * step for j < count, each with probability 1/count,
/// all taken modulo `order`.
struct OutcomeLaw {
    int64_t order;
    int64_t first;
    int64_t step;
    int64_t count;
    bool deterministic() const { return count == 1; }
};

OutcomeLaw measurement_law(const StabilizerState &s, const PauliVector &v);
/// Post-measurement state for outcome k, which must have nonzero probability.
StabilizerState measurement_project(const StabilizerState &s, const PauliVector &v, int64_t k);
/// Samples an outcome with rng and returns it with the post-measurement state.
std::pair<int64_t, StabilizerState> measure_pauli(const StabilizerState &s, const PauliVector &v,
                                                   std::mt19937_64 &rng);

/// An element of the stabilizer group with vector v, if there is one.
std::optional<PauliOperator> stabilizer_element(const StabilizerState &s, const PauliVector &v);

/// Echelon form of a commuting generating set: the same group with at most
/// 2 * rank(local^n) generators and no identity generators. Throws
/// InternalReductionFailure if the set generates a nontrivial phase.
std::vector<PauliOperator> reduce_generators(const Group &full, const std::vector<PauliOperator> &gens);

/// Pairwise commutation, no nontrivial phase times identity in the
/// generated group, and |group| = |G|^n. Empty string when all hold,
/// otherwise a description of the first failure.
std::string stabilizer_invariant_failure(const StabilizerState &s);

}  // namespace gcliff

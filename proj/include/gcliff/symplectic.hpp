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

#include "gcliff/clifford.hpp"

namespace gcliff {

/// An automorphism of G x G^ (X coordinates first, characters in canonical
/// coordinates) preserving beta.
using SymplecticMap = HomMatrix;

/// The multiple of (d+1)^2 bounding the length of every decomposition.
inline constexpr int64_t kDecompositionGateConstant = 16;

bool is_symplectic(const SymplecticMap &sigma);
SymplecticMap symplectic_identity(const Group &g);
SymplecticMap image_in_sp(const Gate &gate);
/// The image of the sequence, gate 0 acting first.
SymplecticMap image_of_sequence(const Group &g, const GateSequence &seq);

/// An automorphism tau of the canonical group with tau(v) = e_0.
HomMatrix extend_to_automorphism(const GroupElement &v);

/// A generator sequence whose symplectic image is sigma.
GateSequence decompose(const SymplecticMap &sigma);
/// A generator sequence ending in a Pauli gate (the identity Pauli when no
/// correction is needed) whose tableau equals t.
GateSequence decompose_clifford(const CliffordTableau &t);
/// The inverse sequence (same tableau up to global phase as the inverse).
GateSequence inverse_sequence(const GateSequence &seq);

/// Random generator gates and symplectic maps for testing and sampling.
HomMatrix random_automorphism(const Group &g, std::mt19937_64 &rng);
QuadraticForm random_quadratic_form(const Group &g, std::mt19937_64 &rng);
Gate random_generator_gate(const Group &g, std::mt19937_64 &rng);
SymplecticMap random_symplectic(const Group &g, std::mt19937_64 &rng);

}  // namespace gcliff

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
#include <optional>
#include <utility>
#include <vector>

#include "gcliff/circuit.hpp"
#include "gcliff/dense.hpp"
#include "gcliff/stabilizer.hpp"

namespace gcliff {

struct DenseBranch {
    MeasurementRecord record;
    DenseState state;
    double probability;
};

struct TableauBranch {
    MeasurementRecord record;
    StabilizerState state;
    double probability;
};

/// Branches with probability below this are dropped.
inline constexpr double kBranchCutoff = 1e-12;

/// Every measurement branch with its normalized post-state. The initial
/// state defaults to |0...0>.
std::vector<DenseBranch> dense_branches(const Circuit &c, const std::optional<DenseState> &initial = std::nullopt,
                                        uint64_t cap = kDefaultDenseCap);
/// One branch sampled with a generator seeded by `seed`.
std::pair<DenseState, MeasurementRecord> dense_run(const Circuit &c, uint64_t seed,
                                                   const std::optional<DenseState> &initial = std::nullopt,
                                                   uint64_t cap = kDefaultDenseCap);

/// Tableau backend, starting from |0...0>. Throws NonClifford on magic-state
/// preparation.
std::vector<TableauBranch> tableau_branches(const Circuit &c);
std::pair<StabilizerState, MeasurementRecord> tableau_run(const Circuit &c, uint64_t seed);

/// True when every generator fixes the dense state within 1e-9.
bool stabilizes(const StabilizerState &s, const DenseState &psi);

/// |G|^{-1/2} sum_g xi(g)|g> on one qudit.
std::vector<cplx> magic_vector(const Group &local, const PhaseTable &xi);

}  // namespace gcliff

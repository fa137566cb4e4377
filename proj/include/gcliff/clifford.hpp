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

#include <string>
#include <variant>
#include <vector>

#include "gcliff/forms.hpp"
#include "gcliff/group.hpp"
#include "gcliff/pauli.hpp"

namespace gcliff {

/// A_tau: |g> -> |tau g>.
struct AutomorphismGate {
    HomMatrix tau;
};
/// S_xi: |g> -> xi(g)|g>.
struct QuadraticGate {
    QuadraticForm xi;
};
/// F_i: |g> -> |G|^{-1/2} sum_chi conj(chi(g)) |i(chi)>, with i written as a
/// matrix over G.
struct FourierGate {
    HomMatrix iso;
};
struct FourierDaggerGate {
    HomMatrix iso;
};
struct PauliGate {
    PauliOperator pauli;
};

using Gate = std::variant<AutomorphismGate, QuadraticGate, FourierGate, FourierDaggerGate, PauliGate>;
/// Gates in time order: element 0 acts first.
using GateSequence = std::vector<Gate>;

const Group &gate_group(const Gate &gate);
std::string gate_name(const Gate &gate);

/// Images of X_{e_k} and Z_{e_k} under U . U^dagger.
struct CliffordTableau {
    Group group;
    std::vector<PauliOperator> x_images;
    std::vector<PauliOperator> z_images;

    bool operator==(const CliffordTableau &o) const {
        return group == o.group && x_images == o.x_images && z_images == o.z_images;
    }
    bool operator!=(const CliffordTableau &o) const { return !(*this == o); }
};

CliffordTableau tableau_identity(const Group &g);
CliffordTableau gate_automorphism(const HomMatrix &tau);
CliffordTableau gate_quadratic(const QuadraticForm &xi);
CliffordTableau gate_fourier(const HomMatrix &iso);
CliffordTableau gate_fourier_dagger(const HomMatrix &iso);
CliffordTableau gate_pauli(const PauliOperator &p);
CliffordTableau gate_tableau(const Gate &gate);
CliffordTableau sequence_tableau(const Group &g, const GateSequence &seq);

PauliOperator conjugate(const CliffordTableau &t, const PauliOperator &p);
/// t2 after t1.
CliffordTableau compose(const CliffordTableau &t2, const CliffordTableau &t1);
CliffordTableau inverse(const CliffordTableau &t);
/// Beta preservation and order consistency.
bool tableau_is_valid(const CliffordTableau &t);
/// The induced automorphism of G x G^ (the symplectic image).
HomMatrix tableau_symplectic(const CliffordTableau &t);

/// Factors f_1, ..., f_k (f_1 applied first) with f_k o ... o f_1 = tau, each
/// the identity outside at most two copies of `local` in local^n.
std::vector<HomMatrix> two_local_factorize(const HomMatrix &tau, const Group &local);
/// Copies of `local` on which m differs from the identity.
std::vector<size_t> touched_slots(const HomMatrix &m, const Group &local);

/// Block matrix helpers shared with the symplectic module: the doubled-group
/// map [[a, b], [c, d]].
HomMatrix block_matrix(const HomMatrix &a, const HomMatrix &b, const HomMatrix &c, const HomMatrix &d);
HomMatrix hom_negate(const HomMatrix &m);

}  // namespace gcliff

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

#include "json.hpp"

#include "gcliff/circuit.hpp"
#include "gcliff/clifford.hpp"
#include "gcliff/protocols.hpp"

namespace gcliff {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// How residues are written: natural (residue of Z_{q_i}) or embedded
/// (multiple of E/q_i in Z_E, E the exponent). Applies to group elements,
/// characters and homomorphism matrices, not to form coefficients.
enum class Convention { Natural, Embedded };

/// Header fields shared by every document.
json document(const std::string &kind, const Group &g, Convention conv = Convention::Natural);
/// Checks format_version and kind; returns the group and convention.
std::pair<Group, Convention> read_header(const json &doc, const std::string &kind);

json element_to_json(const GroupElement &e, Convention conv);
GroupElement element_from_json(const json &j, const Group &g, Convention conv, const std::string &where);
json hom_to_json(const HomMatrix &m, Convention conv);
HomMatrix hom_from_json(const json &j, const Group &g, Convention conv, const std::string &where);

json pauli_to_json(const PauliOperator &p, Convention conv);
PauliOperator pauli_from_json(const json &j, const Group &g, Convention conv, const std::string &where);
json form_to_json(const QuadraticForm &xi, Convention conv);
QuadraticForm form_from_json(const json &j, const Group &g, Convention conv, const std::string &where);
json table_to_json(const PhaseTable &t, const Group &g, Convention conv);
PhaseTable table_from_json(const json &j, const Group &g, Convention conv, const std::string &where);

/// Gate records; `g` is the group the gate acts on. Besides A, S, F, Fdag
/// and P the reader accepts CX on g = local^2, (a, b) -> (a, a + b).
json gate_to_json(const Gate &gate, Convention conv);
Gate gate_from_json(const json &j, const Group &g, Convention conv, const std::string &where);

json symplectic_to_json(const HomMatrix &sigma, const Group &g, Convention conv = Convention::Natural);
/// Returns the map over the doubled group of the document's group.
HomMatrix symplectic_from_json(const json &doc);
json tableau_to_json(const CliffordTableau &t, Convention conv = Convention::Natural);
CliffordTableau tableau_from_json(const json &doc);
json sequence_to_json(const Group &g, const GateSequence &seq, Convention conv = Convention::Natural);
std::pair<Group, GateSequence> sequence_from_json(const json &doc);
json circuit_to_json(const Circuit &c, Convention conv = Convention::Natural);
Circuit circuit_from_json(const json &doc);
json report_to_json(const ProtocolReport &r);

json parse_json_text(const std::string &text, const std::string &source);
json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const json &doc);

}  // namespace gcliff

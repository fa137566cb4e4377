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

#include "gcliff/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"

namespace gcliff {

namespace {

[[noreturn]] void parse_fail(const std::string &where, const std::string &what) {
    fail(ErrorCode::ParseError, where + ": " + what);
}

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        parse_fail(where, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<int64_t> int_list(const json &j, const std::string &where) {
    if (!j.is_array()) {
        parse_fail(where, "expected an array of integers");
    }
    std::vector<int64_t> out;
    for (const json &v : j) {
        if (!v.is_number_integer()) {
            parse_fail(where, "expected an integer, got " + v.dump());
        }
        out.push_back(v.get<int64_t>());
    }
    return out;
}

std::vector<std::vector<int64_t>> int_matrix(const json &j, const std::string &where) {
    if (!j.is_array()) {
        parse_fail(where, "expected an array of rows");
    }
    std::vector<std::vector<int64_t>> rows;
    for (size_t i = 0; i < j.size(); i++) {
        rows.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return rows;
}

std::string text(const json &j, const std::string &where) {
    if (!j.is_string()) {
        parse_fail(where, "expected a string");
    }
    return j.get<std::string>();
}

PhaseRational phase_from(const json &j, const std::string &where) {
    try {
        return PhaseRational::parse(text(j, where));
    } catch (const Error &e) {
        parse_fail(where, e.what());
    }
}

// Library errors raised while building values from parsed data are input
// errors; they are reported with the location.
template <typename F>
auto located(const std::string &where, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        parse_fail(where, e.what());
    }
}

const char *convention_name(Convention c) { return c == Convention::Natural ? "natural" : "embedded"; }

}  // namespace

json document(const std::string &kind, const Group &g, Convention conv) {
    json d;
    d["format_version"] = kFormatVersion;
    d["kind"] = kind;
    d["group"] = g.literal();
    d["convention"] = convention_name(conv);
    return d;
}

std::pair<Group, Convention> read_header(const json &doc, const std::string &kind) {
    const std::string where = kind + " document";
    const json &ver = field(doc, "format_version", where);
    if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion) {
        parse_fail(where, "unsupported format_version " + ver.dump());
    }
    if (text(field(doc, "kind", where), where + ".kind") != kind) {
        parse_fail(where, "kind is '" + doc.at("kind").get<std::string>() + "', expected '" + kind + "'");
    }
    const Group g = located(where + ".group", [&] { return parse_group(text(field(doc, "group", where), where)); });
    Convention conv = Convention::Natural;
    if (doc.contains("convention")) {
        const std::string c = text(doc.at("convention"), where + ".convention");
        if (c == "embedded") {
            conv = Convention::Embedded;
        } else if (c != "natural") {
            parse_fail(where + ".convention", "expected 'natural' or 'embedded'");
        }
    }
    return {g, conv};
}

json element_to_json(const GroupElement &e, Convention conv) {
    return conv == Convention::Natural ? json(e.residues()) : json(to_embedded(e));
}

GroupElement element_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    const std::vector<int64_t> v = int_list(j, where);
    if (v.size() != g.rank()) {
        parse_fail(where, "expected " + std::to_string(g.rank()) + " entries, got " + std::to_string(v.size()));
    }
    return located(where, [&] {
        if (conv == Convention::Embedded) {
            return from_embedded(g, v);
        }
        std::vector<int64_t> r(v.size());
        for (size_t i = 0; i < v.size(); i++) {
            r[i] = mod(v[i], g.order(i));
        }
        return GroupElement(g, r);
    });
}

json hom_to_json(const HomMatrix &m, Convention conv) {
    return conv == Convention::Natural ? json(m.to_rows()) : json(hom_to_embedded(m));
}

HomMatrix hom_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    const auto rows = int_matrix(j, where);
    if (rows.size() != g.rank()) {
        parse_fail(where, "expected " + std::to_string(g.rank()) + " rows, got " + std::to_string(rows.size()));
    }
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != g.rank()) {
            parse_fail(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(g.rank()) + " columns");
        }
    }
    return located(where, [&] {
        if (conv == Convention::Embedded) {
            return hom_from_embedded(g, rows);
        }
        HomMatrix m(g, g, rows);
        require(hom_is_valid(m), ErrorCode::InvalidArgument, "matrix is not a well-defined homomorphism");
        return m;
    });
}

json pauli_to_json(const PauliOperator &p, Convention conv) {
    json j;
    j["phase"] = p.phase.str();
    j["x"] = element_to_json(p.x, conv);
    j["z"] = element_to_json(p.z, conv);
    return j;
}

PauliOperator pauli_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    const PhaseRational ph = j.contains("phase") ? phase_from(j.at("phase"), where + ".phase") : PhaseRational();
    return PauliOperator(ph, element_from_json(field(j, "x", where), g, conv, where + ".x"),
                         Character(element_from_json(field(j, "z", where), g, conv, where + ".z")));
}

json form_to_json(const QuadraticForm &xi, Convention conv) {
    json j;
    j["diag"] = xi.diag();
    json cross = json::array();
    for (size_t a = 0; a < xi.diag().size(); a++) {
        for (size_t b = a + 1; b < xi.diag().size(); b++) {
            if (xi.cross()[a][b] != 0) {
                cross.push_back({a, b, xi.cross()[a][b]});
            }
        }
    }
    j["cross"] = cross;
    j["linear"] = element_to_json(xi.linear(), conv);
    return j;
}

QuadraticForm form_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    const size_t d = g.rank();
    std::vector<int64_t> diag(d, 0);
    if (j.contains("diag")) {
        diag = int_list(j.at("diag"), where + ".diag");
        if (diag.size() != d) {
            parse_fail(where + ".diag", "expected " + std::to_string(d) + " entries");
        }
    }
    std::vector<std::vector<int64_t>> cross(d, std::vector<int64_t>(d, 0));
    if (j.contains("cross")) {
        for (const auto &t : int_matrix(j.at("cross"), where + ".cross")) {
            if (t.size() != 3 || t[0] < 0 || t[1] < 0 || static_cast<size_t>(t[0]) >= d ||
                static_cast<size_t>(t[1]) >= d || t[0] == t[1]) {
                parse_fail(where + ".cross", "expected triples (i, j, c) with i != j in range");
            }
            const size_t a = static_cast<size_t>(std::min(t[0], t[1]));
            const size_t b = static_cast<size_t>(std::max(t[0], t[1]));
            cross[a][b] += t[2];
        }
    }
    std::vector<int64_t> linear(d, 0);
    if (j.contains("linear")) {
        linear = element_from_json(j.at("linear"), g, conv, where + ".linear").residues();
    }
    return located(where, [&] { return QuadraticForm(g, diag, cross, linear); });
}

json table_to_json(const PhaseTable &t, const Group &g, Convention conv) {
    json arr = json::array();
    for (const auto &[key, val] : t) {
        arr.push_back({{"g", element_to_json(GroupElement(g, key), conv)}, {"phase", val.str()}});
    }
    return arr;
}

PhaseTable table_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    if (!j.is_array()) {
        parse_fail(where, "expected an array of {g, phase} entries");
    }
    PhaseTable t;
    for (size_t i = 0; i < j.size(); i++) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        t[element_from_json(field(j[i], "g", w), g, conv, w + ".g").residues()] =
            phase_from(field(j[i], "phase", w), w + ".phase");
    }
    located(where, [&] {
        check_table(g, t);
        return 0;
    });
    return t;
}

json gate_to_json(const Gate &gate, Convention conv) {
    json j;
    j["type"] = gate_name(gate);
    if (const auto *a = std::get_if<AutomorphismGate>(&gate)) {
        j["tau"] = hom_to_json(a->tau, conv);
    } else if (const auto *s = std::get_if<QuadraticGate>(&gate)) {
        j["form"] = form_to_json(s->xi, conv);
    } else if (const auto *f = std::get_if<FourierGate>(&gate)) {
        j["iso"] = hom_to_json(f->iso, conv);
    } else if (const auto *fd = std::get_if<FourierDaggerGate>(&gate)) {
        j["iso"] = hom_to_json(fd->iso, conv);
    } else {
        j["pauli"] = pauli_to_json(std::get<PauliGate>(gate).pauli, conv);
    }
    return j;
}

Gate gate_from_json(const json &j, const Group &g, Convention conv, const std::string &where) {
    const std::string type = text(field(j, "type", where), where + ".type");
    if (type == "A") {
        HomMatrix tau = hom_from_json(field(j, "tau", where), g, conv, where + ".tau");
        if (!is_automorphism(tau)) {
            parse_fail(where + ".tau", "not an automorphism");
        }
        return AutomorphismGate{tau};
    }
    if (type == "S") {
        return QuadraticGate{form_from_json(field(j, "form", where), g, conv, where + ".form")};
    }
    if (type == "F" || type == "Fdag") {
        HomMatrix iso = hom_from_json(field(j, "iso", where), g, conv, where + ".iso");
        if (!is_automorphism(iso)) {
            parse_fail(where + ".iso", "not an isomorphism");
        }
        if (type == "F") {
            return FourierGate{iso};
        }
        return FourierDaggerGate{iso};
    }
    if (type == "P") {
        return PauliGate{pauli_from_json(field(j, "pauli", where), g, conv, where + ".pauli")};
    }
    if (type == "CX") {
        const size_t r = g.rank();
        if (r % 2 != 0 || g != Group(std::vector<int64_t>(g.orders().begin(), g.orders().begin() + r / 2)).power(2)) {
            parse_fail(where, "CX needs two slots of the same group");
        }
        std::vector<std::vector<int64_t>> rows(r, std::vector<int64_t>(r, 0));
        for (size_t i = 0; i < r; i++) {
            rows[i][i] = 1;
        }
        for (size_t i = 0; i < r / 2; i++) {
            rows[r / 2 + i][i] = 1;
        }
        return AutomorphismGate{HomMatrix(g, g, rows)};
    }
    parse_fail(where + ".type", "unknown gate type '" + type + "'");
}

json symplectic_to_json(const HomMatrix &sigma, const Group &g, Convention conv) {
    json d = document("symplectic", g, conv);
    d["matrix"] = hom_to_json(sigma, conv);
    return d;
}

HomMatrix symplectic_from_json(const json &doc) {
    const auto [g, conv] = read_header(doc, "symplectic");
    return hom_from_json(field(doc, "matrix", "symplectic document"), doubled_group(g), conv, "matrix");
}

json tableau_to_json(const CliffordTableau &t, Convention conv) {
    json d = document("tableau", t.group, conv);
    json xs = json::array(), zs = json::array();
    for (const auto &p : t.x_images) {
        xs.push_back(pauli_to_json(p, conv));
    }
    for (const auto &p : t.z_images) {
        zs.push_back(pauli_to_json(p, conv));
    }
    d["x_images"] = xs;
    d["z_images"] = zs;
    return d;
}

CliffordTableau tableau_from_json(const json &doc) {
    const auto [g, conv] = read_header(doc, "tableau");
    CliffordTableau t{g, {}, {}};
    for (const char *key : {"x_images", "z_images"}) {
        const json &arr = field(doc, key, "tableau document");
        if (!arr.is_array() || arr.size() != g.rank()) {
            parse_fail(key, "expected " + std::to_string(g.rank()) + " images");
        }
        auto &out = std::string(key) == "x_images" ? t.x_images : t.z_images;
        for (size_t i = 0; i < arr.size(); i++) {
            out.push_back(pauli_from_json(arr[i], g, conv, std::string(key) + "[" + std::to_string(i) + "]"));
        }
    }
    return t;
}

json sequence_to_json(const Group &g, const GateSequence &seq, Convention conv) {
    json d = document("sequence", g, conv);
    json gates = json::array();
    for (const Gate &gate : seq) {
        gates.push_back(gate_to_json(gate, conv));
    }
    d["gates"] = gates;
    return d;
}

std::pair<Group, GateSequence> sequence_from_json(const json &doc) {
    const auto [g, conv] = read_header(doc, "sequence");
    const json &gates = field(doc, "gates", "sequence document");
    if (!gates.is_array()) {
        parse_fail("gates", "expected an array");
    }
    GateSequence seq;
    for (size_t i = 0; i < gates.size(); i++) {
        seq.push_back(gate_from_json(gates[i], g, conv, "gates[" + std::to_string(i) + "]"));
    }
    return {g, seq};
}

json circuit_to_json(const Circuit &c, Convention conv) {
    json d = document("circuit", c.local, conv);
    d["n"] = c.n;
    json ops = json::array();
    for (const Operation &op : c.ops) {
        json o;
        if (const auto *g = std::get_if<GateOp>(&op)) {
            o["op"] = "gate";
            o["slots"] = g->slots;
            o["gate"] = gate_to_json(g->gate, conv);
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            o["op"] = "measure";
            o["slots"] = m->slots;
            o["register"] = m->reg;
            json obs = json::array();
            for (const PauliVector &v : m->observables) {
                obs.push_back({{"x", element_to_json(v.x, conv)}, {"z", element_to_json(v.z, conv)}});
            }
            o["observables"] = obs;
        } else if (const auto *f = std::get_if<CorrectOp>(&op)) {
            o["op"] = "correct";
            o["function"] = f->function;
            o["args"] = f->args;
            o["slots"] = f->slots;
            if (f->table) {
                o["table"] = table_to_json(*f->table, c.local, conv);
            }
        } else {
            const auto &p = std::get<PrepareOp>(op);
            o["op"] = "prepare";
            o["slot"] = p.slot;
            o["state"] = p.magic ? "magic" : "zero";
            if (p.magic) {
                o["table"] = table_to_json(*p.magic, c.local, conv);
            }
        }
        ops.push_back(o);
    }
    d["ops"] = ops;
    return d;
}

namespace {

std::vector<size_t> slot_list(const json &j, const std::string &where) {
    std::vector<size_t> out;
    for (int64_t v : int_list(j, where)) {
        if (v < 0) {
            parse_fail(where, "negative slot");
        }
        out.push_back(static_cast<size_t>(v));
    }
    return out;
}

}  // namespace

Circuit circuit_from_json(const json &doc) {
    const auto [g, conv] = read_header(doc, "circuit");
    const json &nj = field(doc, "n", "circuit document");
    if (!nj.is_number_integer() || nj.get<int64_t>() < 1) {
        parse_fail("n", "expected a positive integer");
    }
    Circuit c{g, nj.get<size_t>(), {}};
    const json &ops = field(doc, "ops", "circuit document");
    if (!ops.is_array()) {
        parse_fail("ops", "expected an array");
    }
    for (size_t i = 0; i < ops.size(); i++) {
        const std::string w = "ops[" + std::to_string(i) + "]";
        const json &o = ops[i];
        const std::string kind = text(field(o, "op", w), w + ".op");
        if (kind == "gate") {
            const auto slots = slot_list(field(o, "slots", w), w + ".slots");
            if (slots.empty()) {
                parse_fail(w + ".slots", "no slots");
            }
            c.ops.push_back(GateOp{gate_from_json(field(o, "gate", w), g.power(slots.size()), conv, w + ".gate"), slots});
        } else if (kind == "measure") {
            const auto slots = slot_list(field(o, "slots", w), w + ".slots");
            if (slots.empty()) {
                parse_fail(w + ".slots", "no slots");
            }
            const Group k = g.power(slots.size());
            MeasureOp m{slots, {}, text(field(o, "register", w), w + ".register")};
            const json &obs = field(o, "observables", w);
            if (!obs.is_array()) {
                parse_fail(w + ".observables", "expected an array");
            }
            for (size_t t = 0; t < obs.size(); t++) {
                const std::string wo = w + ".observables[" + std::to_string(t) + "]";
                m.observables.emplace_back(element_from_json(field(obs[t], "x", wo), k, conv, wo + ".x"),
                                           Character(element_from_json(field(obs[t], "z", wo), k, conv, wo + ".z")));
            }
            c.ops.push_back(std::move(m));
        } else if (kind == "correct") {
            CorrectOp f{text(field(o, "function", w), w + ".function"), {}, slot_list(field(o, "slots", w), w + ".slots"),
                        std::nullopt};
            const json &args = field(o, "args", w);
            if (!args.is_array()) {
                parse_fail(w + ".args", "expected an array of register names");
            }
            for (const json &a : args) {
                f.args.push_back(text(a, w + ".args"));
            }
            if (o.contains("table")) {
                f.table = table_from_json(o.at("table"), g, conv, w + ".table");
            }
            c.ops.push_back(std::move(f));
        } else if (kind == "prepare") {
            const json &sj = field(o, "slot", w);
            if (!sj.is_number_integer() || sj.get<int64_t>() < 0) {
                parse_fail(w + ".slot", "expected a slot index");
            }
            PrepareOp p{sj.get<size_t>(), std::nullopt};
            const std::string state = o.contains("state") ? text(o.at("state"), w + ".state") : "zero";
            if (state == "magic") {
                p.magic = table_from_json(field(o, "table", w), g, conv, w + ".table");
            } else if (state != "zero") {
                parse_fail(w + ".state", "expected 'zero' or 'magic'");
            }
            c.ops.push_back(std::move(p));
        } else {
            parse_fail(w + ".op", "unknown operation '" + kind + "'");
        }
    }
    located("circuit", [&] {
        validate_circuit(c);
        return 0;
    });
    return c;
}

json report_to_json(const ProtocolReport &r) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "report";
    j["protocol"] = r.name;
    j["group"] = r.group;
    j["passed"] = r.passed();
    j["cases"] = r.cases;
    j["branch_count"] = r.branch_count;
    j["failures"] = r.failures;
    json phases = json::array();
    for (const cplx &p : r.phases) {
        phases.push_back({p.real(), p.imag()});
    }
    j["phases"] = phases;
    j["notes"] = r.notes;
    return j;
}

json parse_json_text(const std::string &body, const std::string &source) {
    try {
        return json::parse(body);
    } catch (const json::parse_error &e) {
        parse_fail(source, e.what());
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        parse_fail(path, "cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

void write_json_file(const std::string &path, const json &doc) {
    std::ofstream out(path);
    require(static_cast<bool>(out), ErrorCode::InvalidArgument, "cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace gcliff

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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gcliff/error.hpp"
#include "gcliff/io.hpp"
#include "gcliff/symplectic.hpp"
#include "oracles.hpp"

using namespace gcliff;
using namespace gcliff::testing;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

bool same_gate(const Gate &a, const Gate &b) {
    const Group &g = gate_group(a);
    return gate_group(b) == g && gate_tableau(a) == gate_tableau(b) && a.index() == b.index();
}

}  // namespace

TEST_CASE("elements and matrices in both conventions") {
    const Group g = make_group({4, 2});
    std::mt19937_64 rng(81);
    for (Convention conv : {Convention::Natural, Convention::Embedded}) {
        for (int t = 0; t < 10; t++) {
            const GroupElement e = random_element(g, rng);
            CHECK(element_from_json(element_to_json(e, conv), g, conv, "e") == e);
            const HomMatrix m = random_automorphism(g, rng);
            CHECK(hom_from_json(hom_to_json(m, conv), g, conv, "m") == m);
        }
    }
    CHECK(element_to_json(GroupElement(g, {1, 1}), Convention::Embedded) == json::array({1, 2}));
    CHECK(code_of([&] { element_from_json(json::array({1, 1}), g, Convention::Embedded, "e"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] { element_from_json(json::array({1}), g, Convention::Natural, "e"); }) == ErrorCode::ParseError);
}

TEST_CASE("gates, forms and tables round trip") {
    std::mt19937_64 rng(82);
    for (const auto &orders : std::vector<std::vector<int64_t>>{{2}, {6}, {4, 2}, {3, 9}}) {
        const Group g = make_group(orders);
        for (int t = 0; t < 20; t++) {
            const QuadraticForm xi = random_quadratic_form(g, rng);
            CHECK(quad_equal(form_from_json(form_to_json(xi, Convention::Natural), g, Convention::Natural, "f"), xi));
            const PhaseTable table = quad_table(xi);
            CHECK(table_from_json(table_to_json(table, g, Convention::Natural), g, Convention::Natural, "t") == table);
            const Gate gate = random_generator_gate(g, rng);
            for (Convention conv : {Convention::Natural, Convention::Embedded}) {
                CHECK(same_gate(gate_from_json(gate_to_json(gate, conv), g, conv, "g"), gate));
            }
            const PauliOperator p(PhaseRational(3, 2 * g.exponent()), random_element(g, rng),
                                  Character(random_element(g, rng)));
            CHECK(pauli_from_json(pauli_to_json(p, Convention::Natural), g, Convention::Natural, "p") == p);
            CHECK(same_gate(gate_from_json(gate_to_json(PauliGate{p}, Convention::Natural), g, Convention::Natural,
                                           "g"),
                            PauliGate{p}));
        }
    }
    const Group z22 = make_group({2, 2});
    const Gate cx = gate_from_json(json{{"type", "CX"}}, z22, Convention::Natural, "g");
    CHECK(gate_tableau(cx) == gate_automorphism(HomMatrix(z22, z22, {{1, 0}, {1, 1}})));
    CHECK(code_of([&] { gate_from_json(json{{"type", "Q"}}, z22, Convention::Natural, "g"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] {
              gate_from_json(json{{"type", "A"}, {"tau", {{1, 1}, {1, 1}}}}, z22, Convention::Natural, "g");
          }) == ErrorCode::ParseError);
}

TEST_CASE("documents round trip") {
    std::mt19937_64 rng(83);
    const Group g = make_group({2, 4});
    const HomMatrix sigma = random_symplectic(g, rng);
    CHECK(symplectic_from_json(symplectic_to_json(sigma, g)) == sigma);
    CHECK(symplectic_from_json(symplectic_to_json(sigma, g, Convention::Embedded)) == sigma);
    GateSequence seq;
    for (int k = 0; k < 8; k++) {
        seq.push_back(random_generator_gate(g, rng));
    }
    const CliffordTableau t = sequence_tableau(g, seq);
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
    CHECK(tableau_from_json(tableau_to_json(t, Convention::Embedded)) == t);
    const auto [g2, seq2] = sequence_from_json(sequence_to_json(g, seq));
    CHECK(g2 == g);
    CHECK(sequence_tableau(g, seq2) == t);
    for (const Circuit &c : {build_cx_protocol(g), build_magic_injection(make_group({2}), t_gate_table()).circuit}) {
        for (Convention conv : {Convention::Natural, Convention::Embedded}) {
            const json doc = circuit_to_json(c, conv);
            const Circuit back = circuit_from_json(doc);
            CHECK(circuit_to_json(back, conv) == doc);
            CHECK(back.ops.size() == c.ops.size());
        }
    }
}

TEST_CASE("header and parse errors carry locations") {
    const Group g = make_group({2});
    json doc = symplectic_to_json(symplectic_identity(g), g);
    json bad = doc;
    bad.erase("format_version");
    CHECK(code_of([&] { symplectic_from_json(bad); }) == ErrorCode::ParseError);
    bad = doc;
    bad["format_version"] = 2;
    CHECK(code_of([&] { symplectic_from_json(bad); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { tableau_from_json(doc); }) == ErrorCode::ParseError);
    bad = doc;
    bad["convention"] = "other";
    CHECK(code_of([&] { symplectic_from_json(bad); }) == ErrorCode::ParseError);
    try {
        parse_json_text("{\"a\": ", "input.json");
        FAIL("expected a parse error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("input.json") != std::string::npos);
    }
    CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);

    json c = circuit_to_json(build_cx_protocol(g));
    json broken = c;
    broken["ops"][2]["slots"] = {0, 7};
    CHECK(code_of([&] { circuit_from_json(broken); }) == ErrorCode::ParseError);
    broken = c;
    broken["ops"][5]["function"] = "no-such-fix";
    CHECK(code_of([&] { circuit_from_json(broken); }) == ErrorCode::ParseError);
    broken = c;
    broken["ops"][0]["op"] = "teleport";
    CHECK(code_of([&] { circuit_from_json(broken); }) == ErrorCode::ParseError);
    broken = c;
    broken["ops"][2]["observables"][0]["phase"] = "1/0";
    broken["ops"][1]["gate"] = {{"type", "P"}, {"phase", "1/0"}, {"x", {0}}, {"z", {0}}};
    CHECK(code_of([&] { circuit_from_json(broken); }) == ErrorCode::ParseError);
}

TEST_CASE("files") {
    const Group g = make_group({4, 2});
    const json doc = sequence_to_json(g, {FourierGate{HomMatrix::identity(g)}});
    const std::string path = "gcliff_io_test.json";
    write_json_file(path, doc);
    CHECK(read_json_file(path) == doc);
    std::remove(path.c_str());
}

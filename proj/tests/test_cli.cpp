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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gcliff/io.hpp"
#include "gcliff/symplectic.hpp"

using namespace gcliff;

namespace {

/// Runs the CLI with arguments and returns its exit status.
int run(const std::string &args) {
    const std::string cmd = std::string(GCLIFF_CLI_PATH) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PauliVector z_vec(const GroupElement &c) { return PauliVector(GroupElement::zero(c.group()), Character(c)); }

}  // namespace

TEST_CASE("decompose") {
    const Group z2 = make_group({2});
    const Group d2 = doubled_group(z2);
    write_json_file("cli_id.json", symplectic_to_json(symplectic_identity(z2), z2));
    CHECK(run("decompose --in cli_id.json --out cli_seq.json --verify") == 0);
    CHECK(read_json_file("cli_seq.json").at("gates").empty());
    write_json_file("cli_swap.json", symplectic_to_json(HomMatrix(d2, d2, {{0, 1}, {1, 0}}), z2));
    CHECK(run("decompose --in cli_swap.json --out cli_seq.json --verify") == 0);
    CHECK(slurp("cli_stderr.txt").find("verify: pass") != std::string::npos);
    const auto [g, seq] = sequence_from_json(read_json_file("cli_seq.json"));
    CHECK(image_of_sequence(g, seq) == HomMatrix(d2, d2, {{0, 1}, {1, 0}}));
    write_json_file("cli_bad.json", symplectic_to_json(HomMatrix(d2, d2, {{1, 1}, {1, 1}}), z2));
    CHECK(run("decompose --in cli_bad.json") == 2);
    CHECK(slurp("cli_stderr.txt").find("NotSymplectic") != std::string::npos);
    std::ofstream("cli_garbage.json") << "{ \"format_version\": 1, ";
    CHECK(run("decompose --in cli_garbage.json") == 2);
    CHECK(slurp("cli_stderr.txt").find("ParseError") != std::string::npos);
    CHECK(run("decompose --in cli_missing.json") == 2);
}

TEST_CASE("simulate") {
    const Group z2 = make_group({2});
    const GroupElement one(z2, {1});
    write_json_file("cli_zero.json", circuit_to_json(Circuit{z2, 1, {MeasureOp{{0}, {z_vec(one)}, "m"}}}));
    CHECK(run("simulate --in cli_zero.json --shots 50 --seed 1 --out cli_sim.json") == 0);
    CHECK(read_json_file("cli_sim.json").at("counts") == json{{"m=0", 50}});

    write_json_file("cli_plus.json",
                    circuit_to_json(Circuit{
                        z2, 1, {GateOp{FourierGate{HomMatrix::identity(z2)}, {0}}, MeasureOp{{0}, {z_vec(one)}, "m"}}}));
    for (const char *backend : {"tableau", "dense"}) {
        const std::string args =
            std::string("simulate --in cli_plus.json --shots 10000 --seed 3 --backend ") + backend + " --out ";
        CHECK(run(args + "cli_a.json") == 0);
        CHECK(run(args + "cli_b.json") == 0);
        CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
        const json counts = read_json_file("cli_a.json").at("counts");
        const double f0 = counts.at("m=0").get<double>() / 10000.0;
        CHECK(f0 == doctest::Approx(0.5).epsilon(0.04));
    }
    CHECK(run("simulate --in cli_plus.json --backend dense --branches --out cli_br.json") == 0);
    for (const json &row : read_json_file("cli_br.json").at("branches")) {
        CHECK(row.at("probability").get<double>() == doctest::Approx(0.5));
    }

    write_json_file("cli_magic.json", circuit_to_json(build_magic_injection(z2, t_gate_table()).circuit));
    CHECK(run("simulate --in cli_magic.json --backend tableau") == 2);
    CHECK(run("simulate --in cli_magic.json --backend dense --shots 10") == 0);
    CHECK(run("simulate --in cli_magic.json --backend dense --dense-cap 2") == 3);
    CHECK(run("simulate --in cli_plus.json --backend quantum") == 2);
}

TEST_CASE("verify, counterexample, canonicalize and protocols") {
    CHECK(run("verify --group 2 --out cli_v.json") == 0);
    const json v = read_json_file("cli_v.json");
    CHECK(v.at("passed").get<bool>());
    bool classics = false;
    for (const json &c : v.at("checks")) {
        classics = classics || c.at("name") == "qubit-classics";
    }
    CHECK(classics);
    CHECK(run("verify --group 4,2 --out cli_v42.json") == 0);
    CHECK(run("verify --group 4,2 --out cli_v42b.json") == 0);
    CHECK(slurp("cli_v42.json") == slurp("cli_v42b.json"));

    CHECK(run("counterexample --group 2,4") == 0);
    CHECK(slurp("cli_stdout.txt").find("not in the CX-generated subgroup") != std::string::npos);
    CHECK(run("counterexample --group 3") == 2);

    CHECK(run("canonicalize --group 2,3 --out cli_can.json") == 0);
    CHECK(read_json_file("cli_can.json").at("canonical") == "6");

    CHECK(run("protocol cx --group 3 --out cli_cx.json --report cli_cxr.json") == 0);
    CHECK(read_json_file("cli_cxr.json").at("passed").get<bool>());
    CHECK(circuit_from_json(read_json_file("cli_cx.json")).n == 3);
    CHECK(run("protocol magic --group 3 --out cli_m3.json") == 0);
    CHECK(run("protocol triple --group 4 --out cli_t.json") == 0);
    CHECK(run("protocol split-fourier --group 4 --second 2 --out cli_sf.json") == 0);
    CHECK(run("protocol teleport --group 2") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("verify") == 2);
}

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

// Command-line driver: decomposition, simulation, verification suites and
// protocol construction. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 resource cap.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gcliff/arith.hpp"
#include "gcliff/error.hpp"
#include "gcliff/io.hpp"
#include "gcliff/simulate.hpp"
#include "gcliff/suite.hpp"
#include "gcliff/symplectic.hpp"

using namespace gcliff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct RunConfig {
    std::string group;
    std::string in;
    std::string out;
    std::string report;
    std::string backend = "tableau";
    std::string protocol;
    std::string h_group = "2";
    std::string xi = "auto";
    uint64_t shots = 1;
    uint64_t seed = 1;
    uint64_t dense_cap = kDefaultDenseCap;
    uint64_t bfs_cap = uint64_t{1} << 20;
    bool branches = false;
    bool verify = false;
    bool bfs = false;
};

void emit(const std::string &path, const json &doc) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        write_json_file(path, doc);
    }
}

int cmd_decompose(const RunConfig &cfg) {
    const json doc = read_json_file(cfg.in);
    const std::string kind = doc.value("kind", "");
    Group g({2});
    GateSequence seq;
    bool ok = true;
    if (kind == "tableau") {
        const CliffordTableau t = tableau_from_json(doc);
        g = t.group;
        seq = decompose_clifford(t);
        ok = !cfg.verify || sequence_tableau(g, seq) == t;
    } else {
        const HomMatrix sigma = symplectic_from_json(doc);
        g = read_header(doc, "symplectic").first;
        require(is_symplectic(sigma), ErrorCode::NotSymplectic, cfg.in + ": matrix is not symplectic");
        seq = decompose(sigma);
        ok = !cfg.verify || image_of_sequence(g, seq) == sigma;
    }
    emit(cfg.out, sequence_to_json(g, seq));
    std::cerr << "gates: " << seq.size();
    if (cfg.verify) {
        std::cerr << ", verify: " << (ok ? "pass" : "FAIL");
    }
    std::cerr << "\n";
    return ok ? kExitOk : kExitVerify;
}

json register_json(const MeasurementRecord &rec) {
    json j = json::object();
    for (const auto &[name, v] : rec) {
        j[name] = v.outcomes;
    }
    return j;
}

int cmd_simulate(const RunConfig &cfg) {
    const Circuit c = circuit_from_json(read_json_file(cfg.in));
    require(cfg.backend == "tableau" || cfg.backend == "dense", ErrorCode::InvalidArgument,
            "--backend must be tableau or dense");
    const bool dense = cfg.backend == "dense";
    json doc = document("simulation", c.local);
    doc["backend"] = cfg.backend;
    if (cfg.branches) {
        json rows = json::array();
        auto add = [&](const MeasurementRecord &rec, double p) {
            rows.push_back({{"record", register_json(rec)}, {"probability", p}});
            std::cout << record_key(rec) << "\t" << p << "\n";
        };
        if (dense) {
            for (const DenseBranch &b : dense_branches(c, std::nullopt, cfg.dense_cap)) {
                add(b.record, b.probability);
            }
        } else {
            for (const TableauBranch &b : tableau_branches(c)) {
                add(b.record, b.probability);
            }
        }
        doc["branches"] = rows;
    } else {
        require(cfg.shots > 0, ErrorCode::InvalidArgument, "--shots must be positive");
        std::mt19937_64 seeds(cfg.seed);
        std::map<std::string, uint64_t> counts;
        for (uint64_t s = 0; s < cfg.shots; s++) {
            const uint64_t shot_seed = seeds();
            const MeasurementRecord rec =
                dense ? dense_run(c, shot_seed, std::nullopt, cfg.dense_cap).second : tableau_run(c, shot_seed).second;
            counts[record_key(rec)]++;
        }
        doc["shots"] = cfg.shots;
        doc["seed"] = cfg.seed;
        json freq = json::object();
        for (const auto &[key, n] : counts) {
            freq[key] = n;
            std::cout << key << "\t" << n << "\t" << static_cast<double>(n) / static_cast<double>(cfg.shots) << "\n";
        }
        doc["counts"] = freq;
    }
    if (!cfg.out.empty()) {
        write_json_file(cfg.out, doc);
    }
    return kExitOk;
}

json checks_json(const Group &g, const std::vector<CheckResult> &results) {
    json doc = document("verification", g);
    json arr = json::array();
    bool all = true;
    for (const CheckResult &r : results) {
        arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
    }
    doc["passed"] = all;
    doc["checks"] = arr;
    return doc;
}

int print_checks(const std::vector<CheckResult> &results) {
    bool all = true;
    for (const CheckResult &r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitVerify;
}

int cmd_verify(const RunConfig &cfg) {
    const Group g = parse_group(cfg.group);
    const auto results = verify_group(g, cfg.seed);
    if (!cfg.out.empty()) {
        write_json_file(cfg.out, checks_json(g, results));
    }
    return print_checks(results);
}

int cmd_counterexample(const RunConfig &cfg) {
    const Group g = parse_group(cfg.group.empty() ? "2,4" : cfg.group);
    require(g.orders() == std::vector<int64_t>{2, 4} || g.orders() == std::vector<int64_t>{4, 2},
            ErrorCode::InvalidArgument, "the certificate is for the group 2,4");
    const ProtocolReport rep = cx_insufficiency_certificate(cfg.bfs, cfg.bfs_cap);
    std::cout << (rep.passed() ? "certificate: target map is not in the CX-generated subgroup\n"
                               : "certificate FAILED\n");
    for (const std::string &n : rep.notes) {
        std::cout << "  " << n << "\n";
    }
    for (const std::string &f : rep.failures) {
        std::cout << "  failure: " << f << "\n";
    }
    if (!cfg.out.empty()) {
        write_json_file(cfg.out, report_to_json(rep));
    }
    return rep.passed() ? kExitOk : kExitVerify;
}

int cmd_canonicalize(const RunConfig &cfg) {
    const Group g = parse_group(cfg.group);
    const auto [canon, iso] = canonicalize(g);
    json doc = document("canonicalization", g);
    doc["canonical"] = canon.literal();
    doc["forward"] = hom_to_json(iso.forward, Convention::Natural);
    doc["backward"] = hom_to_json(iso.backward, Convention::Natural);
    emit(cfg.out, doc);
    return kExitOk;
}

PhaseTable magic_table(const Group &g, const std::string &choice) {
    if (choice == "t" || (choice == "auto" && g.orders() == std::vector<int64_t>{2})) {
        require(g.orders() == std::vector<int64_t>{2}, ErrorCode::InvalidArgument, "--xi t needs the group 2");
        return t_gate_table();
    }
    const bool all_three =
        std::all_of(g.orders().begin(), g.orders().end(), [](int64_t q) { return q == 3; });
    if (choice == "cubic" || (choice == "auto" && all_three)) {
        return cubic_table(g);
    }
    require(choice == "auto" || choice == "standard", ErrorCode::InvalidArgument,
            "--xi must be auto, t, cubic or standard");
    return quad_table(standard_form(g));
}

int cmd_protocol(const RunConfig &cfg) {
    const Group g = parse_group(cfg.group);
    ProtocolReport rep;
    json artifact;
    if (cfg.protocol == "cx") {
        artifact = circuit_to_json(build_cx_protocol(g));
        rep = check_cx_protocol(g, cfg.dense_cap);
    } else if (cfg.protocol == "magic") {
        const PhaseTable xi = magic_table(g, cfg.xi);
        artifact = circuit_to_json(build_magic_injection(g, xi).circuit);
        rep = check_magic_injection(g, xi, cfg.dense_cap);
    } else if (cfg.protocol == "triple") {
        const QuadraticForm xi = standard_form(g);
        const Gate s = QuadraticGate{xi};
        const Gate f = FourierGate{i_xi_matrix(xi)};
        artifact = sequence_to_json(g, {s, f, s, f, s, f});
        rep = check_triple_identity(xi);
    } else if (cfg.protocol == "split-fourier") {
        const Group h = parse_group(cfg.h_group);
        const QuadraticForm xi = standard_form(g);
        const HomMatrix id = HomMatrix::identity(h);
        artifact = circuit_to_json(build_split_fourier(xi, h, id));
        rep = check_split_fourier(xi, h, id);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown protocol '" + cfg.protocol + "'");
    }
    emit(cfg.out, artifact);
    const json r = report_to_json(rep);
    if (!cfg.report.empty()) {
        write_json_file(cfg.report, r);
    }
    std::cerr << rep.name << " on " << rep.group << ": " << (rep.passed() ? "pass" : "FAIL") << ", "
              << rep.branch_count << " branches\n";
    return rep.passed() ? kExitOk : kExitVerify;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapExceeded:
            return kExitCap;
        case ErrorCode::InternalReductionFailure:
            return kExitVerify;
        default:
            return kExitInput;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford circuits over finite abelian groups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_group = [&](CLI::App *sub) {
        return sub->add_option("--group", cfg.group, "group literal, e.g. 4,2");
    };
    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", cfg.out, "output file (stdout if omitted)"); };
    auto add_caps = [&](CLI::App *sub) {
        sub->add_option("--dense-cap", cfg.dense_cap, "maximum dense dimension")->check(CLI::PositiveNumber);
    };

    CLI::App *dec = app.add_subcommand("decompose", "decompose a symplectic map or Clifford tableau");
    dec->add_option("--in", cfg.in, "symplectic or tableau document")->required();
    add_out(dec);
    dec->add_flag("--verify", cfg.verify, "recompose and compare");

    CLI::App *sim = app.add_subcommand("simulate", "run a circuit");
    sim->add_option("--in", cfg.in, "circuit document")->required();
    add_out(sim);
    sim->add_option("--backend", cfg.backend, "tableau or dense")->check(CLI::IsMember({"tableau", "dense"}));
    sim->add_option("--shots", cfg.shots, "number of samples")->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "sampling seed");
    sim->add_flag("--branches", cfg.branches, "print the exact branch table");
    add_caps(sim);

    CLI::App *ver = app.add_subcommand("verify", "run the verification suite for a group");
    add_group(ver)->required();
    add_out(ver);
    ver->add_option("--seed", cfg.seed, "seed for sampled checks");

    CLI::App *cex = app.add_subcommand("counterexample", "certificate that CX and one-slot maps do not generate");
    add_group(cex);
    add_out(cex);
    cex->add_flag("--bfs", cfg.bfs, "also enumerate the generated subgroup");
    cex->add_option("--bfs-cap", cfg.bfs_cap, "maximum closure size")->check(CLI::PositiveNumber);

    CLI::App *can = app.add_subcommand("canonicalize", "divisibility-chain form of a group");
    add_group(can)->required();
    add_out(can);

    CLI::App *pro = app.add_subcommand("protocol", "build and check a protocol circuit");
    pro->add_option("name", cfg.protocol, "cx, magic, triple or split-fourier")
        ->required()
        ->check(CLI::IsMember({"cx", "magic", "triple", "split-fourier"}));
    add_group(pro)->required();
    add_out(pro);
    pro->add_option("--report", cfg.report, "write the protocol report here");
    pro->add_option("--second", cfg.h_group, "second group for split-fourier");
    pro->add_option("--xi", cfg.xi, "magic table: auto, t, cubic or standard");
    add_caps(pro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*dec) return cmd_decompose(cfg);
        if (*sim) return cmd_simulate(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*cex) return cmd_counterexample(cfg);
        if (*can) return cmd_canonicalize(cfg);
        if (*pro) return cmd_protocol(cfg);
    } catch (const Error &e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

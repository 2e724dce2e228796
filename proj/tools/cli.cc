// Copyright 2026 The dqc1k Authors
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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dqc1/analysis.h"
#include "dqc1/circuit_io.h"
#include "dqc1/engine.h"
#include "dqc1/errors.h"
#include "dqc1/gadgets.h"
#include "dqc1/verify.h"
#include "json.hpp"

namespace dqc1::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20140224;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, "cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PostselectionSpec parse_postselect_flag(const std::string &text) {
    PostselectionSpec ps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 2 != item.size() || (item[eq + 1] != '0' && item[eq + 1] != '1') ||
            item.substr(0, eq).find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("--postselect", "expected comma-separated index=bit pairs, got '" + item + "'");
        }
        ps.assignments[std::stoul(item.substr(0, eq))] = static_cast<std::uint8_t>(item[eq + 1] - '0');
    }
    return ps;
}

json postselect_json(const PostselectionSpec &ps) {
    json out = json::object();
    for (auto [q, bit] : ps.assignments) {
        out[std::to_string(q)] = static_cast<int>(bit);
    }
    return out;
}

json distribution_json(const OutcomeDistribution &d) {
    json probs = json::object();
    for (const auto &[bits, p] : d.as_map()) {
        probs[bits] = p;
    }
    return {{"measured", d.measured_qubits()}, {"probs", std::move(probs)}};
}

SimConfig make_config(std::size_t density_cap) {
    SimConfig cfg;
    cfg.density_cap = density_cap;
    cfg.exact_cap = std::max(cfg.exact_cap, density_cap);
    cfg.matrix_cap = std::max(cfg.matrix_cap, density_cap);
    return cfg;
}

struct Options {
    std::string circuit, pattern, unitary, part = "real", mode, out, postselect, suite, mutate = "none";
    std::size_t shots = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::size_t density_cap = SimConfig{}.density_cap;
    std::vector<std::string> dist_files;
};

json cmd_run(const Options &o) {
    const auto c = parse_circuit(read_file(o.circuit));
    if (o.shots == 0) {
        throw ContractError("--shots must be >= 1");
    }
    const auto record = sample(c, o.shots, o.seed, make_config(o.density_cap));
    json counts = json::object();
    for (const auto &[bits, n] : record.counts()) {
        counts[bits] = n;
    }
    return {{"measured", c.measured}, {"counts", std::move(counts)}, {"shots", o.shots}, {"seed", o.seed}};
}

json cmd_exact(const Options &o) {
    const auto c = parse_circuit(read_file(o.circuit));
    const SimConfig cfg = make_config(o.density_cap);
    const PostselectionSpec ps = o.postselect.empty() ? c.postselect : parse_postselect_flag(o.postselect);
    const auto joint = exact_distribution(c, cfg);
    if (ps.empty()) {
        return distribution_json(joint);
    }
    const auto cond = condition(joint, ps);
    json doc = distribution_json(cond.distribution);
    doc["postselect"] = postselect_json(ps);
    doc["postselection_probability"] = cond.event_probability;
    return doc;
}

json cmd_trace(const Options &o) {
    const Circuit u = parse_unitary(read_file(o.unitary));
    if (o.part != "real" && o.part != "imaginary") {
        throw ParseError("--part", "must be real or imaginary");
    }
    const TracePart part = o.part == "real" ? TracePart::Real : TracePart::Imaginary;
    const auto est = estimate_trace(u, part, o.shots, o.seed, make_config(o.density_cap));
    return {{"part", o.part},           {"n", u.total_qubits}, {"estimate", est.normalized_trace_part},
            {"stderr", est.std_error}, {"shots", est.shots},  {"seed", o.seed}};
}

json cmd_compile(const Options &o, std::ostream &err) {
    const auto pattern = parse_pattern(read_file(o.pattern));
    CompiledReduction r;
    if (o.mode == "n1") {
        r = compile_n_plus_1(pattern);
    } else if (o.mode == "three") {
        r = compile_three(pattern);
    } else {
        throw ParseError("--mode", "must be n1 or three");
    }
    const std::string doc = serialize_circuit(r.circuit);
    json report{{"mode", o.mode},
                {"total_qubits", r.circuit.total_qubits()},
                {"measured_count", r.circuit.measured.size()},
                {"measured", r.circuit.measured},
                {"output_qubits", r.output_qubits},
                {"postselect", postselect_json(r.postselect)}};
    if (o.out.empty()) {
        report["circuit"] = json::parse(doc);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << doc << "\n")) {
            err << "error: cannot write " << o.out << "\n";
            throw ResourceError("cannot write output file");
        }
        report["out"] = o.out;
    }
    return report;
}

json cmd_check_error(const Options &o) {
    const auto p = parse_distribution(read_file(o.dist_files.at(0)));
    const auto q = parse_distribution(read_file(o.dist_files.at(1)));
    const auto rep = minimal_multiplicative_error(p, q);
    if (rep.incomparable) {
        return {{"incomparable", true}, {"outcome", rep.incomparable_outcome}};
    }
    json marginals = json::array();
    for (const auto &[subset, c] : rep.per_marginal_c) {
        marginals.push_back({{"qubits", subset}, {"c", c}});
    }
    return {{"incomparable", false}, {"worst_c", rep.worst_c}, {"per_marginal", std::move(marginals)}};
}

json cmd_verify(const Options &o, bool &all_passed) {
    VerifyOptions vo;
    vo.mutation = mutation_from_name(o.mutate);
    const auto reports = run_suite(o.suite, vo);
    json suites = json::array();
    all_passed = true;
    for (const auto &rep : reports) {
        json props = json::array();
        for (const auto &p : rep.properties) {
            props.push_back({{"name", p.name},
                             {"passed", p.passed},
                             {"residual", p.residual},
                             {"threshold", p.threshold},
                             {"detail", p.detail}});
        }
        suites.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"properties", std::move(props)}});
        all_passed &= rep.passed();
    }
    return {{"passed", all_passed}, {"suites", std::move(suites)}};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate and check one-clean-qubit circuits"};
    app.require_subcommand(1, 1);
    Options o;

    auto *run_cmd = app.add_subcommand("run", "Sample shots from a circuit file");
    run_cmd->add_option("--circuit", o.circuit, "Circuit document")->required();
    run_cmd->add_option("--shots", o.shots, "Number of shots");
    run_cmd->add_option("--seed", o.seed, "Random seed");
    run_cmd->add_option("--density-cap", o.density_cap, "Largest density-matrix register");

    auto *exact_cmd = app.add_subcommand("exact", "Exact (optionally postselected) output distribution");
    exact_cmd->add_option("--circuit", o.circuit, "Circuit document")->required();
    exact_cmd->add_option("--postselect", o.postselect, "Override postselection, e.g. 0=1,2=0");
    exact_cmd->add_option("--density-cap", o.density_cap, "Largest density-matrix register");

    auto *trace_cmd = app.add_subcommand("trace", "Estimate a normalized trace with the one-clean-qubit circuit");
    trace_cmd->add_option("--unitary", o.unitary, "Unitary (bare circuit) document")->required();
    trace_cmd->add_option("--part", o.part, "real or imaginary");
    trace_cmd->add_option("--shots", o.shots, "Number of shots");
    trace_cmd->add_option("--seed", o.seed, "Random seed");
    trace_cmd->add_option("--density-cap", o.density_cap, "Largest density-matrix register");

    auto *compile_cmd = app.add_subcommand("compile", "Compile an MBQC pattern into a postselected circuit");
    compile_cmd->add_option("--pattern", o.pattern, "Pattern document")->required();
    compile_cmd->add_option("--mode", o.mode, "n1 or three")->required();
    compile_cmd->add_option("--out", o.out, "Write the circuit document here");

    auto *check_cmd = app.add_subcommand("check-error", "Minimal multiplicative error between two distributions");
    check_cmd->add_option("files", o.dist_files, "Two distribution documents")->required()->expected(2);

    auto *verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("--suite", o.suite, "qstate, gadgets, reductions, analysis or all")->required();
    verify_cmd->add_option("--mutate", o.mutate, "none, flip-w-polarity or flip-postselect-bit");

    std::vector<const char *> argv{"dqc1"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        json doc;
        int code = kOk;
        if (*run_cmd) {
            doc = cmd_run(o);
        } else if (*exact_cmd) {
            doc = cmd_exact(o);
        } else if (*trace_cmd) {
            doc = cmd_trace(o);
        } else if (*compile_cmd) {
            doc = cmd_compile(o, err);
        } else if (*check_cmd) {
            doc = cmd_check_error(o);
        } else if (*verify_cmd) {
            bool passed = false;
            doc = cmd_verify(o, passed);
            code = passed ? kOk : kCheckFailed;
        }
        out << doc.dump(2) << "\n";
        return code;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const PostselectionImpossibleError &e) {
        err << "error: " << e.what() << "\n";
        return kPostselectionImpossible;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace dqc1::cli

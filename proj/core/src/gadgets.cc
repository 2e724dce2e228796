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

#include "dqc1/gadgets.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "dqc1/errors.h"
#include "json.hpp"

namespace dqc1 {

namespace {

std::vector<Qubit> identity_wires(std::size_t n) {
    std::vector<Qubit> w(n);
    std::iota(w.begin(), w.end(), Qubit{0});
    return w;
}

void check_disjoint(std::initializer_list<Qubit> singles, std::span<const Qubit> graph_register,
                    const GraphSpec &graph) {
    if (graph_register.size() != graph.num_vertices) {
        throw ContractError("graph register has " + std::to_string(graph_register.size()) + " wires for " +
                            std::to_string(graph.num_vertices) + " vertices");
    }
    auto errs = graph.errors();
    if (!errs.empty()) {
        throw ContractError("invalid graph: " + errs.front());
    }
    std::set<Qubit> seen;
    for (Qubit q : singles) {
        if (!seen.insert(q).second) {
            throw WiringError("gadget wires overlap at qubit " + std::to_string(q));
        }
    }
    for (Qubit q : graph_register) {
        if (!seen.insert(q).second) {
            throw WiringError("gadget wires overlap at qubit " + std::to_string(q));
        }
    }
}

std::vector<Gate> projector_controlled_x(const GraphSpec &graph, Qubit target, std::vector<Qubit> zero_controls,
                                         std::span<const Qubit> graph_register) {
    std::vector<Gate> out;
    const auto prep = cluster_unitary(graph, graph_register);
    for (auto it = prep.rbegin(); it != prep.rend(); ++it) {
        out.push_back(inverse(*it));
    }
    zero_controls.insert(zero_controls.end(), graph_register.begin(), graph_register.end());
    std::vector<std::uint8_t> polarity(zero_controls.size(), 0);
    out.push_back(gates::mcx(std::move(zero_controls), std::move(polarity), target));
    out.insert(out.end(), prep.begin(), prep.end());
    return out;
}

}  // namespace

std::vector<Gate> cluster_unitary(const GraphSpec &graph, std::span<const Qubit> wires) {
    auto errs = graph.errors();
    if (!errs.empty()) {
        throw ContractError("invalid graph: " + errs.front());
    }
    std::vector<Qubit> w = wires.empty() ? identity_wires(graph.num_vertices)
                                         : std::vector<Qubit>(wires.begin(), wires.end());
    if (w.size() != graph.num_vertices) {
        throw ContractError("cluster_unitary: wire count does not match vertex count");
    }
    std::vector<Gate> out;
    for (Qubit q : w) {
        out.push_back(gates::h(q));
    }
    for (auto [a, b] : graph.edges) {
        out.push_back(gates::cz(w[a], w[b]));
    }
    return out;
}

PureState cluster_state(const GraphSpec &graph) {
    PureState psi(graph.num_vertices);
    for (const Gate &g : cluster_unitary(graph)) {
        psi.apply(g);
    }
    return psi;
}

std::vector<Gate> build_W(const GraphSpec &graph, Qubit clean, std::span<const Qubit> graph_register) {
    check_disjoint({clean}, graph_register, graph);
    return projector_controlled_x(graph, clean, {}, graph_register);
}

std::vector<Gate> build_W_prime(const GraphSpec &graph, Qubit clean, Qubit ancilla,
                                std::span<const Qubit> graph_register) {
    check_disjoint({clean, ancilla}, graph_register, graph);
    return projector_controlled_x(graph, clean, {ancilla}, graph_register);
}

Dqc1Circuit build_trace_circuit(const Circuit &u, TracePart part) {
    require_valid(u);
    Dqc1Circuit c;
    c.circuit.total_qubits = u.total_qubits + 1;
    c.clean_qubits = {0};
    c.measured = {0};
    c.circuit.add(gates::h(0));
    for (const Gate &g : u.gates) {
        c.circuit.add(controlled(shifted(g, 1), 0));
    }
    if (part == TracePart::Imaginary) {
        c.circuit.add(gates::sdg(0));
    }
    c.circuit.add(gates::h(0));
    return c;
}

std::vector<std::string> MbqcPattern::errors() const {
    auto out = graph.errors();
    if (outputs.empty()) {
        out.push_back("pattern needs at least one output vertex");
    }
    std::set<std::size_t> outs;
    for (auto v : outputs) {
        if (v >= graph.num_vertices) {
            out.push_back("output vertex " + std::to_string(v) + " out of range");
        }
        if (!outs.insert(v).second) {
            out.push_back("output vertex " + std::to_string(v) + " repeated");
        }
    }
    for (auto [v, _] : angles) {
        if (outs.contains(v)) {
            out.push_back("output vertex " + std::to_string(v) + " carries a measurement angle");
        } else if (v >= graph.num_vertices) {
            out.push_back("angle for vertex " + std::to_string(v) + " out of range");
        }
    }
    for (std::size_t v = 0; v < graph.num_vertices; ++v) {
        if (!outs.contains(v) && !angles.contains(v)) {
            out.push_back("non-output vertex " + std::to_string(v) + " has no angle");
        }
    }
    return out;
}

std::vector<std::size_t> MbqcPattern::non_outputs() const {
    std::vector<std::size_t> out;
    for (auto [v, _] : angles) {
        out.push_back(v);
    }
    return out;
}

MbqcPattern pattern_from_rotations(std::span<const double> angles) {
    MbqcPattern p;
    p.graph = GraphSpec::linear(angles.size() + 1);
    for (std::size_t j = 0; j < angles.size(); ++j) {
        p.angles[j] = angles[j];
    }
    p.outputs = {angles.size()};
    return p;
}

Matrix rotation_step(double theta) {
    const double r = std::numbers::sqrt2 / 2;
    const Complex e = std::polar(1.0, theta);
    return {{r, r * e}, {r, -r * e}};
}

Matrix measurement_alignment(double theta) {
    const Matrix x{{0, 1}, {1, 0}};
    return x * rotation_step(theta);
}

PureState rotation_target(std::span<const double> angles) {
    PureState psi(1);
    psi.apply(gates::h(0));
    for (double theta : angles) {
        psi.apply(gates::u1q(0, rotation_step(theta)));
    }
    return psi;
}

OutcomeDistribution byproduct_free_output(const MbqcPattern &pattern) {
    auto errs = pattern.errors();
    if (!errs.empty()) {
        throw ContractError("invalid pattern: " + errs.front());
    }
    const std::size_t n = pattern.graph.num_vertices;
    PureState psi = cluster_state(pattern.graph);
    for (auto [v, theta] : pattern.angles) {
        psi.apply(gates::u1q(v, measurement_alignment(theta)));
    }
    BasisIndex mask = 0;
    for (auto v : pattern.non_outputs()) {
        mask |= qubit_mask(v, n);
    }
    std::vector<Complex> projected(psi.amplitudes().begin(), psi.amplitudes().end());
    double norm = 0;
    for (BasisIndex i = 0; i < projected.size(); ++i) {
        if ((i & mask) != mask) {
            projected[i] = 0;
        }
        norm += std::norm(projected[i]);
    }
    if (!(norm > 0)) {
        throw PostselectionImpossibleError("byproduct-free branch has probability zero");
    }
    for (auto &a : projected) {
        a /= std::sqrt(norm);
    }
    std::vector<Qubit> outs(pattern.outputs.begin(), pattern.outputs.end());
    return measure_probs(PureState::from_amplitudes(std::move(projected)), outs);
}

namespace {

void add_projector(Circuit &c, const GraphSpec &graph, Qubit clean, std::optional<Qubit> ancilla,
                   const std::vector<Qubit> &reg, ProjectorForm form) {
    if (form == ProjectorForm::Direct) {
        c.add(gates::graph_proj_x(graph, reg, clean, ancilla));
    } else if (ancilla) {
        c.append(build_W_prime(graph, clean, *ancilla, reg));
    } else {
        c.append(build_W(graph, clean, reg));
    }
}

void require_pattern(const MbqcPattern &p) {
    auto errs = p.errors();
    if (!errs.empty()) {
        throw ContractError("invalid pattern: " + errs.front());
    }
}

}  // namespace

CompiledReduction compile_n_plus_1(const MbqcPattern &pattern, ProjectorForm form) {
    require_pattern(pattern);
    const std::size_t n = pattern.graph.num_vertices;
    std::vector<Qubit> reg(n);
    std::iota(reg.begin(), reg.end(), Qubit{1});

    CompiledReduction out;
    out.pattern = pattern;
    Dqc1Circuit &c = out.circuit;
    c.circuit.total_qubits = n + 1;
    c.clean_qubits = {0};
    add_projector(c.circuit, pattern.graph, 0, std::nullopt, reg, form);
    for (auto [v, theta] : pattern.angles) {
        c.circuit.add(gates::u1q(reg[v], measurement_alignment(theta)));
    }
    c.measured = identity_wires(n + 1);
    out.postselect.assignments[0] = 1;
    for (auto v : pattern.non_outputs()) {
        out.postselect.assignments[reg[v]] = 1;
    }
    for (auto v : pattern.outputs) {
        out.output_qubits.push_back(reg[v]);
    }
    c.postselect = out.postselect;
    return out;
}

CompiledReduction compile_three(const MbqcPattern &pattern, ProjectorForm form) {
    require_pattern(pattern);
    if (pattern.outputs.size() != 1) {
        throw ContractError("three-measurement compilation needs exactly one output vertex, got " +
                            std::to_string(pattern.outputs.size()));
    }
    const std::size_t n = pattern.graph.num_vertices;
    const Qubit clean = 0, ancilla = 1;
    std::vector<Qubit> reg(n);
    std::iota(reg.begin(), reg.end(), Qubit{2});

    CompiledReduction out;
    out.pattern = pattern;
    Dqc1Circuit &c = out.circuit;
    c.circuit.total_qubits = n + 2;
    c.clean_qubits = {clean};
    add_projector(c.circuit, pattern.graph, clean, ancilla, reg, form);
    std::vector<Qubit> and_inputs;
    for (auto [v, theta] : pattern.angles) {
        c.circuit.add(gates::u1q(reg[v], measurement_alignment(theta)));
        and_inputs.push_back(reg[v]);
    }
    std::vector<std::uint8_t> ones(and_inputs.size(), 1);
    c.circuit.add(gates::mcx(std::move(and_inputs), std::move(ones), ancilla));

    const Qubit output = reg[pattern.outputs.front()];
    c.measured = {clean, ancilla, output};
    out.postselect.assignments = {{clean, 1}, {ancilla, 1}};
    out.output_qubits = {output};
    c.postselect = out.postselect;
    return out;
}

MbqcPattern parse_pattern(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("", "pattern document must be an object");
    }
    auto index = [](const json &v, const std::string &where) {
        if (!v.is_number_unsigned()) {
            throw ParseError(where, "expected a non-negative integer");
        }
        return v.get<std::size_t>();
    };
    MbqcPattern p;
    if (!doc.contains("graph") || !doc["graph"].is_object()) {
        throw ParseError("graph", "missing graph object");
    }
    const auto &g = doc["graph"];
    if (!g.contains("n") || !g.contains("edges") || !g["edges"].is_array()) {
        throw ParseError("graph", "graph needs fields n and edges");
    }
    p.graph.num_vertices = index(g["n"], "graph.n");
    for (std::size_t i = 0; i < g["edges"].size(); ++i) {
        const auto &e = g["edges"][i];
        const std::string where = "graph.edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) {
            throw ParseError(where, "edge must be a pair");
        }
        p.graph.edges.emplace_back(index(e[0], where), index(e[1], where));
    }
    if (doc.contains("angles")) {
        if (!doc["angles"].is_object()) {
            throw ParseError("angles", "expected an object of vertex -> radians");
        }
        for (const auto &[key, val] : doc["angles"].items()) {
            const std::string where = "angles." + key;
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(where, "key must be a decimal vertex index");
            }
            if (!val.is_number()) {
                throw ParseError(where, "angle must be a number");
            }
            p.angles[std::stoul(key)] = val.get<double>();
        }
    }
    if (!doc.contains("outputs") || !doc["outputs"].is_array()) {
        throw ParseError("outputs", "missing output array");
    }
    for (std::size_t i = 0; i < doc["outputs"].size(); ++i) {
        p.outputs.push_back(index(doc["outputs"][i], "outputs[" + std::to_string(i) + "]"));
    }
    auto errs = p.errors();
    if (!errs.empty()) {
        throw ValidationError(errs.front());
    }
    return p;
}

std::string serialize_pattern(const MbqcPattern &p) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [a, b] : p.graph.edges) {
        edges.push_back({a, b});
    }
    doc["graph"] = {{"n", p.graph.num_vertices}, {"edges", std::move(edges)}};
    nlohmann::ordered_json angles = nlohmann::ordered_json::object();
    for (auto [v, theta] : p.angles) {
        angles[std::to_string(v)] = theta;
    }
    doc["angles"] = std::move(angles);
    doc["outputs"] = p.outputs;
    return doc.dump(2);
}

}  // namespace dqc1

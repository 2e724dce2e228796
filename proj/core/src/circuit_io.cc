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

#include "dqc1/circuit_io.h"

#include <set>

#include "dqc1/errors.h"
#include "json.hpp"

namespace dqc1 {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::size_t read_index(const json &v, const std::string &where) {
    if (!v.is_number_unsigned()) {
        throw ParseError(where, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::vector<Qubit> read_index_array(const json &v, const std::string &where) {
    if (!v.is_array()) {
        throw ParseError(where, "expected an integer array");
    }
    std::vector<Qubit> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(read_index(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix read_matrix(const json &v, const std::string &where) {
    if (!v.is_array() || v.empty()) {
        throw ParseError(where, "expected a non-empty array of rows");
    }
    const std::size_t rows = v.size();
    Matrix m(rows, v[0].is_array() ? v[0].size() : 0);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto &row = v[r];
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != m.cols()) {
            throw ParseError(rw, "rows must be arrays of equal length");
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto &e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError(rw + "[" + std::to_string(c) + "]", "entries must be [re, im] pairs");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

GraphSpec read_graph(const json &v, const std::string &where) {
    if (!v.is_object() || !v.contains("n") || !v.contains("edges")) {
        throw ParseError(where, "graph needs fields n and edges");
    }
    GraphSpec g;
    g.num_vertices = read_index(v["n"], where + ".n");
    const auto &edges = v["edges"];
    if (!edges.is_array()) {
        throw ParseError(where + ".edges", "expected an array of pairs");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto pair = read_index_array(edges[i], where + ".edges[" + std::to_string(i) + "]");
        if (pair.size() != 2) {
            throw ParseError(where + ".edges[" + std::to_string(i) + "]", "edge must have two endpoints");
        }
        g.edges.emplace_back(pair[0], pair[1]);
    }
    return g;
}

Gate read_gate(const json &v, const std::string &where) {
    static const std::set<std::string> kFields{"g", "q", "c", "pol", "u", "theta", "graph", "extra_zero"};
    if (!v.is_object()) {
        throw ParseError(where, "gate must be an object");
    }
    for (const auto &[key, _] : v.items()) {
        if (!kFields.contains(key)) {
            throw ParseError(where + "." + key, "unknown gate field");
        }
    }
    if (!v.contains("g") || !v["g"].is_string()) {
        throw ParseError(where + ".g", "missing gate kind");
    }
    const auto kind = gate_kind_from_name(v["g"].get<std::string>());
    if (!kind) {
        throw ParseError(where + ".g", "unknown gate kind '" + v["g"].get<std::string>() + "'");
    }
    Gate g;
    g.kind = *kind;
    if (!v.contains("q")) {
        throw ParseError(where + ".q", "missing target array");
    }
    g.targets = read_index_array(v["q"], where + ".q");
    if (v.contains("c")) {
        g.controls = read_index_array(v["c"], where + ".c");
    }
    if (v.contains("pol")) {
        const auto &pol = v["pol"];
        if (!pol.is_array()) {
            throw ParseError(where + ".pol", "expected a 0/1 array");
        }
        for (std::size_t i = 0; i < pol.size(); ++i) {
            const auto bit = read_index(pol[i], where + ".pol[" + std::to_string(i) + "]");
            if (bit > 1) {
                throw ParseError(where + ".pol[" + std::to_string(i) + "]", "polarity must be 0 or 1");
            }
            g.polarity.push_back(static_cast<std::uint8_t>(bit));
        }
    }
    if (v.contains("u")) {
        g.unitary = read_matrix(v["u"], where + ".u");
    }
    if (v.contains("theta")) {
        if (!v["theta"].is_number()) {
            throw ParseError(where + ".theta", "expected radians");
        }
        g.theta = v["theta"].get<double>();
    }
    if (v.contains("graph")) {
        g.graph = read_graph(v["graph"], where + ".graph");
    }
    if (v.contains("extra_zero")) {
        g.extra_zero = read_index(v["extra_zero"], where + ".extra_zero");
    }
    if (g.kind == GateKind::RZ && !v.contains("theta")) {
        throw ParseError(where + ".theta", "RZ needs theta");
    }
    if (g.kind == GateKind::GraphProjX && !v.contains("graph")) {
        throw ParseError(where + ".graph", "GraphProjX needs a graph");
    }
    if (g.kind != GateKind::RZ && v.contains("theta")) {
        throw ParseError(where + ".theta", "only RZ takes theta");
    }
    if (g.kind != GateKind::GraphProjX && v.contains("graph")) {
        throw ParseError(where + ".graph", "only GraphProjX takes a graph");
    }
    auto issues = gate_structure_issues(g);
    if (!issues.empty()) {
        throw ParseError(where, issues.front().message);
    }
    return g;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
}

Circuit read_circuit_body(const json &doc) {
    if (!doc.is_object()) {
        throw ParseError("", "circuit document must be an object");
    }
    if (!doc.contains("total_qubits")) {
        throw ParseError("total_qubits", "missing");
    }
    Circuit c;
    c.total_qubits = read_index(doc["total_qubits"], "total_qubits");
    if (!doc.contains("gates") || !doc["gates"].is_array()) {
        throw ParseError("gates", "missing gate array");
    }
    const auto &gates = doc["gates"];
    for (std::size_t i = 0; i < gates.size(); ++i) {
        c.gates.push_back(read_gate(gates[i], "gates[" + std::to_string(i) + "]"));
    }
    return c;
}

ordered_json write_gate(const Gate &g) {
    ordered_json v;
    v["g"] = std::string(gate_name(g.kind));
    v["q"] = g.targets;
    if (!g.controls.empty() || g.kind == GateKind::MCX || g.kind == GateKind::GraphProjX) {
        v["c"] = g.controls;
    }
    if (g.kind == GateKind::MCX) {
        std::vector<int> pol(g.polarity.begin(), g.polarity.end());
        v["pol"] = pol;
    }
    if (!g.unitary.empty()) {
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < g.unitary.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (const Complex &e : g.unitary.row(r)) {
                row.push_back({e.real(), e.imag()});
            }
            rows.push_back(std::move(row));
        }
        v["u"] = std::move(rows);
    }
    if (g.kind == GateKind::RZ) {
        v["theta"] = g.theta;
    }
    if (g.kind == GateKind::GraphProjX) {
        ordered_json edges = ordered_json::array();
        for (auto [a, b] : g.graph.edges) {
            edges.push_back({a, b});
        }
        v["graph"] = {{"n", g.graph.num_vertices}, {"edges", std::move(edges)}};
        if (g.extra_zero) {
            v["extra_zero"] = *g.extra_zero;
        }
    }
    return v;
}

}  // namespace

Dqc1Circuit parse_circuit(std::string_view text) {
    static const std::set<std::string> kFields{"total_qubits", "clean_qubits", "gates", "measure", "postselect"};
    const json doc = parse_document(text);
    Dqc1Circuit out;
    out.circuit = read_circuit_body(doc);
    for (const auto &[key, _] : doc.items()) {
        if (!kFields.contains(key)) {
            throw ParseError(key, "unknown field");
        }
    }
    if (!doc.contains("clean_qubits")) {
        throw ParseError("clean_qubits", "missing");
    }
    out.clean_qubits = read_index_array(doc["clean_qubits"], "clean_qubits");
    if (!doc.contains("measure")) {
        throw ParseError("measure", "missing");
    }
    out.measured = read_index_array(doc["measure"], "measure");
    if (doc.contains("postselect")) {
        const auto &ps = doc["postselect"];
        if (!ps.is_object()) {
            throw ParseError("postselect", "expected an object of index -> bit");
        }
        for (const auto &[key, bit] : ps.items()) {
            const std::string where = "postselect." + key;
            std::size_t pos = 0;
            Qubit q = 0;
            try {
                q = std::stoul(key, &pos);
            } catch (const std::exception &) {
                pos = 0;
            }
            if (key.empty() || pos != key.size() || !std::isdigit(static_cast<unsigned char>(key[0]))) {
                throw ParseError(where, "key must be a decimal qubit index");
            }
            const auto b = read_index(bit, where);
            if (b > 1) {
                throw ParseError(where, "postselected bit must be 0 or 1");
            }
            out.postselect.assignments[q] = static_cast<std::uint8_t>(b);
        }
    }
    auto issues = validate(out);
    if (!issues.empty()) {
        std::string msg;
        for (const auto &i : issues) {
            msg += (msg.empty() ? "" : "; ") + i.message;
        }
        throw ValidationError(msg);
    }
    return out;
}

std::string serialize_circuit(const Dqc1Circuit &c) {
    ordered_json doc;
    doc["total_qubits"] = c.circuit.total_qubits;
    doc["clean_qubits"] = c.clean_qubits;
    ordered_json gates = ordered_json::array();
    for (const Gate &g : c.circuit.gates) {
        gates.push_back(write_gate(g));
    }
    doc["gates"] = std::move(gates);
    doc["measure"] = c.measured;
    if (!c.postselect.empty()) {
        ordered_json ps = ordered_json::object();
        for (auto [q, bit] : c.postselect.assignments) {
            ps[std::to_string(q)] = static_cast<int>(bit);
        }
        doc["postselect"] = std::move(ps);
    }
    return doc.dump(2);
}

Circuit parse_unitary(std::string_view text) {
    Circuit c = read_circuit_body(parse_document(text));
    auto issues = validate(c);
    if (!issues.empty()) {
        std::string msg;
        for (const auto &i : issues) {
            msg += (msg.empty() ? "" : "; ") + i.message;
        }
        throw ValidationError(msg);
    }
    return c;
}

}  // namespace dqc1

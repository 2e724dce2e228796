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

#include "dqc1/gate.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "dqc1/errors.h"

namespace dqc1 {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 15> kNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "Sdg"},
    {GateKind::T, "T"},
    {GateKind::Tdg, "Tdg"},
    {GateKind::RZ, "RZ"},
    {GateKind::U1Q, "U1Q"},
    {GateKind::CZ, "CZ"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CU, "CU"},
    {GateKind::MCX, "MCX"},
    {GateKind::GraphProjX, "GraphProjX"},
}};

const Complex kI{0, 1};

Matrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

std::string wires_str(const std::vector<Qubit> &qs) {
    std::string s = "[";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(qs[i]);
    }
    return s + "]";
}

}  // namespace

std::vector<std::string> GraphSpec::errors() const {
    std::vector<std::string> out;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
        if (a >= num_vertices || b >= num_vertices) {
            out.push_back("edge (" + std::to_string(a) + "," + std::to_string(b) + ") references a vertex >= " +
                          std::to_string(num_vertices));
            continue;
        }
        if (a == b) {
            out.push_back("self-loop on vertex " + std::to_string(a));
            continue;
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            out.push_back("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return out;
}

GraphSpec GraphSpec::linear(std::size_t num_vertices) {
    GraphSpec g{num_vertices, {}};
    for (std::size_t v = 0; v + 1 < num_vertices; ++v) {
        g.edges.emplace_back(v, v + 1);
    }
    return g;
}

std::vector<Complex> graph_state_amplitudes(const GraphSpec &graph) {
    const std::size_t n = graph.num_vertices;
    const std::size_t dim = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> amps(dim);
    for (BasisIndex x = 0; x < dim; ++x) {
        int parity = 0;
        for (auto [a, b] : graph.edges) {
            parity ^= qubit_bit(x, a, n) && qubit_bit(x, b, n);
        }
        amps[x] = parity ? -scale : scale;
    }
    return amps;
}

std::string_view gate_name(GateKind kind) {
    for (auto [k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (auto [k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool is_single_qubit_kind(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ:
        case GateKind::U1Q:
            return true;
        default:
            return false;
    }
}

namespace gates {

namespace {
Gate single(GateKind kind, Qubit q) {
    Gate g;
    g.kind = kind;
    g.targets = {q};
    return g;
}
}  // namespace

Gate h(Qubit q) { return single(GateKind::H, q); }
Gate x(Qubit q) { return single(GateKind::X, q); }
Gate y(Qubit q) { return single(GateKind::Y, q); }
Gate z(Qubit q) { return single(GateKind::Z, q); }
Gate s(Qubit q) { return single(GateKind::S, q); }
Gate sdg(Qubit q) { return single(GateKind::Sdg, q); }
Gate t(Qubit q) { return single(GateKind::T, q); }
Gate tdg(Qubit q) { return single(GateKind::Tdg, q); }

Gate rz(Qubit q, double theta) {
    Gate g = single(GateKind::RZ, q);
    g.theta = theta;
    return g;
}

Gate u1q(Qubit q, Matrix u) {
    Gate g = single(GateKind::U1Q, q);
    g.unitary = std::move(u);
    return g;
}

Gate cz(Qubit a, Qubit b) {
    Gate g;
    g.kind = GateKind::CZ;
    g.targets = {a, b};
    return g;
}

Gate cnot(Qubit control, Qubit target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.controls = {control};
    g.targets = {target};
    return g;
}

Gate cu(std::vector<Qubit> controls, std::vector<Qubit> targets, Matrix u) {
    Gate g;
    g.kind = GateKind::CU;
    g.controls = std::move(controls);
    g.targets = std::move(targets);
    g.unitary = std::move(u);
    return g;
}

Gate mcx(std::vector<Qubit> controls, std::vector<std::uint8_t> polarity, Qubit target) {
    Gate g;
    g.kind = GateKind::MCX;
    g.controls = std::move(controls);
    g.polarity = std::move(polarity);
    g.targets = {target};
    return g;
}

Gate graph_proj_x(GraphSpec graph, std::vector<Qubit> graph_register, Qubit target, std::optional<Qubit> extra_zero) {
    Gate g;
    g.kind = GateKind::GraphProjX;
    g.graph = std::move(graph);
    g.controls = std::move(graph_register);
    g.targets = {target};
    g.extra_zero = extra_zero;
    return g;
}

}  // namespace gates

Matrix single_qubit_matrix(const Gate &g) {
    const double r = std::numbers::sqrt2 / 2;
    switch (g.kind) {
        case GateKind::H:
            return {{r, r}, {r, -r}};
        case GateKind::X:
            return pauli_x();
        case GateKind::Y:
            return {{0, -kI}, {kI, 0}};
        case GateKind::Z:
            return {{1, 0}, {0, -1}};
        case GateKind::S:
            return {{1, 0}, {0, kI}};
        case GateKind::Sdg:
            return {{1, 0}, {0, -kI}};
        case GateKind::T:
            return {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
        case GateKind::Tdg:
            return {{1, 0}, {0, std::polar(1.0, -std::numbers::pi / 4)}};
        case GateKind::RZ:
            return {{std::polar(1.0, -g.theta / 2), 0}, {0, std::polar(1.0, g.theta / 2)}};
        case GateKind::U1Q:
            return g.unitary;
        default:
            throw ContractError("single_qubit_matrix: " + std::string(gate_name(g.kind)) + " is not a single-qubit gate");
    }
}

std::vector<Qubit> gate_qubits(const Gate &g) {
    std::vector<Qubit> out;
    if (g.kind == GateKind::GraphProjX && g.extra_zero) {
        out.push_back(*g.extra_zero);
    }
    out.insert(out.end(), g.controls.begin(), g.controls.end());
    out.insert(out.end(), g.targets.begin(), g.targets.end());
    return out;
}

namespace {

// P (x) U + (I - P) (x) I where P projects the leading `num_controls` local
// bits onto `pattern` (packed, first control most significant).
Matrix pattern_controlled(std::size_t num_controls, BasisIndex pattern, const Matrix &u) {
    const std::size_t tdim = u.rows();
    const std::size_t dim = (std::size_t{1} << num_controls) * tdim;
    Matrix out = Matrix::identity(dim);
    const std::size_t base = pattern * tdim;
    for (std::size_t r = 0; r < tdim; ++r) {
        for (std::size_t c = 0; c < tdim; ++c) {
            out(base + r, base + c) = u(r, c);
        }
    }
    return out;
}

}  // namespace

Matrix local_matrix(const Gate &g) {
    if (is_single_qubit_kind(g.kind)) {
        return single_qubit_matrix(g);
    }
    switch (g.kind) {
        case GateKind::CZ: {
            const std::array<Complex, 4> d{1, 1, 1, -1};
            return Matrix::diagonal(d);
        }
        case GateKind::CNOT:
            return pattern_controlled(1, 1, pauli_x());
        case GateKind::CU: {
            const BasisIndex all_ones = (BasisIndex{1} << g.controls.size()) - 1;
            return pattern_controlled(g.controls.size(), all_ones, g.unitary);
        }
        case GateKind::MCX: {
            BasisIndex pattern = 0;
            for (auto p : g.polarity) {
                pattern = (pattern << 1) | (p ? 1 : 0);
            }
            return pattern_controlled(g.controls.size(), pattern, pauli_x());
        }
        case GateKind::GraphProjX: {
            // Local order: [extra], register..., target.  W = I + (P (x) (X - I)).
            auto graph_amps = graph_state_amplitudes(g.graph);
            std::vector<Complex> proj_vec;
            if (g.extra_zero) {
                proj_vec.assign(graph_amps.size() * 2, Complex{});
                std::copy(graph_amps.begin(), graph_amps.end(), proj_vec.begin());
            } else {
                proj_vec = std::move(graph_amps);
            }
            const Matrix p = outer(proj_vec, proj_vec);
            const Matrix eye_reg = Matrix::identity(p.rows());
            return kron(p, pauli_x()) + kron(eye_reg - p, Matrix::identity(2));
        }
        default:
            break;
    }
    throw ContractError("local_matrix: unknown gate kind");
}

Matrix gate_matrix(const Gate &g, std::size_t context_qubits, const SimConfig &config) {
    if (context_qubits > config.matrix_cap) {
        throw ResourceError("gate_matrix: " + std::to_string(context_qubits) + " context qubits exceeds cap " +
                            std::to_string(config.matrix_cap));
    }
    require_valid_gate(g, context_qubits);
    const auto qs = gate_qubits(g);
    return SparseOperator::embed(local_matrix(g), qs, context_qubits).to_dense();
}

std::vector<ValidationIssue> gate_structure_issues(const Gate &g) {
    std::vector<ValidationIssue> out;
    const std::string name(gate_name(g.kind));
    auto structure = [&](std::string msg) { out.push_back({IssueKind::Structure, name + ": " + std::move(msg)}); };

    const std::size_t expected_targets = g.kind == GateKind::CZ ? 2 : (g.kind == GateKind::CU ? 0 : 1);
    if (g.kind == GateKind::CU) {
        if (g.targets.empty()) {
            structure("needs at least one target");
        }
    } else if (g.targets.size() != expected_targets) {
        structure("expects " + std::to_string(expected_targets) + " target(s), got " + std::to_string(g.targets.size()));
    }

    const bool takes_controls = g.kind == GateKind::CNOT || g.kind == GateKind::CU || g.kind == GateKind::MCX ||
                                g.kind == GateKind::GraphProjX;
    if (!takes_controls && !g.controls.empty()) {
        structure("does not take controls");
    }
    if (g.kind == GateKind::CNOT && g.controls.size() != 1) {
        structure("expects exactly one control");
    }
    if (g.kind == GateKind::MCX && g.polarity.size() != g.controls.size()) {
        structure("polarity length " + std::to_string(g.polarity.size()) + " != control count " +
                  std::to_string(g.controls.size()));
    }
    if (g.kind != GateKind::MCX && !g.polarity.empty()) {
        structure("only MCX takes a polarity list");
    }
    for (auto p : g.polarity) {
        if (p > 1) {
            structure("polarity entries must be 0 or 1");
            break;
        }
    }
    if (g.extra_zero && g.kind != GateKind::GraphProjX) {
        structure("only GraphProjX takes extra_zero");
    }

    if (g.kind == GateKind::GraphProjX) {
        if (g.controls.size() != g.graph.num_vertices) {
            structure("graph register has " + std::to_string(g.controls.size()) + " wires but graph has " +
                      std::to_string(g.graph.num_vertices) + " vertices");
        }
        for (auto &e : g.graph.errors()) {
            structure("graph: " + e);
        }
    }

    const bool takes_matrix = g.kind == GateKind::U1Q || g.kind == GateKind::CU;
    if (takes_matrix) {
        const std::size_t want = std::size_t{1} << g.targets.size();
        if (g.unitary.rows() != want || g.unitary.cols() != want) {
            structure("matrix must be " + std::to_string(want) + "x" + std::to_string(want));
        } else {
            const double residual = g.unitary.unitarity_residual();
            if (!(residual <= tol::kUnitarity)) {
                out.push_back({IssueKind::Unitarity, name + ": matrix is not unitary (residual " +
                                                         std::to_string(residual) + ")"});
            }
        }
    } else if (!g.unitary.empty()) {
        structure("does not take a matrix");
    }

    const auto qs = gate_qubits(g);
    std::set<Qubit> distinct(qs.begin(), qs.end());
    if (distinct.size() != qs.size()) {
        out.push_back({IssueKind::Wiring, name + ": repeated wire in " + wires_str(qs)});
    }
    return out;
}

std::vector<ValidationIssue> gate_issues(const Gate &g, std::size_t total_qubits) {
    auto out = gate_structure_issues(g);
    for (Qubit q : gate_qubits(g)) {
        if (q >= total_qubits) {
            out.push_back({IssueKind::Wiring, std::string(gate_name(g.kind)) + ": qubit " + std::to_string(q) +
                                                  " out of range for " + std::to_string(total_qubits) + " qubits"});
        }
    }
    return out;
}

void require_valid_gate(const Gate &g, std::size_t total_qubits) {
    auto issues = gate_issues(g, total_qubits);
    if (issues.empty()) {
        return;
    }
    const auto &first = issues.front();
    switch (first.kind) {
        case IssueKind::Unitarity:
            throw UnitarityError(first.message);
        case IssueKind::Wiring:
            throw WiringError(first.message);
        default:
            throw ContractError(first.message);
    }
}

Gate inverse(const Gate &g) {
    Gate out = g;
    switch (g.kind) {
        case GateKind::S:
            out.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            out.kind = GateKind::S;
            break;
        case GateKind::T:
            out.kind = GateKind::Tdg;
            break;
        case GateKind::Tdg:
            out.kind = GateKind::T;
            break;
        case GateKind::RZ:
            out.theta = -g.theta;
            break;
        case GateKind::U1Q:
        case GateKind::CU:
            out.unitary = g.unitary.adjoint();
            break;
        default:
            // H, X, Y, Z, CZ, CNOT, MCX and GraphProjX are involutions.
            break;
    }
    return out;
}

Gate controlled(const Gate &g, Qubit control) {
    if (is_single_qubit_kind(g.kind)) {
        return gates::cu({control}, g.targets, single_qubit_matrix(g));
    }
    switch (g.kind) {
        case GateKind::CZ:
            return gates::cu({control, g.targets[0]}, {g.targets[1]}, single_qubit_matrix(gates::z(0)));
        case GateKind::CNOT:
            return gates::mcx({control, g.controls[0]}, {1, 1}, g.targets[0]);
        case GateKind::CU: {
            Gate out = g;
            out.controls.insert(out.controls.begin(), control);
            return out;
        }
        case GateKind::MCX: {
            Gate out = g;
            out.controls.insert(out.controls.begin(), control);
            out.polarity.insert(out.polarity.begin(), 1);
            return out;
        }
        case GateKind::GraphProjX:
            return gates::cu({control}, gate_qubits(g), local_matrix(g));
        default:
            break;
    }
    throw ContractError("controlled: unknown gate kind");
}

Gate shifted(const Gate &g, std::size_t offset) {
    Gate out = g;
    for (auto &q : out.targets) {
        q += offset;
    }
    for (auto &q : out.controls) {
        q += offset;
    }
    if (out.extra_zero) {
        *out.extra_zero += offset;
    }
    return out;
}

}  // namespace dqc1

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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqc1/config.h"
#include "dqc1/matrix.h"

namespace dqc1 {

/// Simple undirected graph; vertex v of a graph register is wired to
/// register[v].
struct GraphSpec {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Empty when valid: no self-loops, no duplicate edges, vertices in range.
    std::vector<std::string> errors() const;
    bool operator==(const GraphSpec &) const = default;

    static GraphSpec linear(std::size_t num_vertices);
};

/// Amplitudes of the graph state |G> = prod_{(a,b)} CZ_ab H^n |0..0>, from the
/// closed form (-1)^{#edges with both endpoints set} / sqrt(2^n).
std::vector<Complex> graph_state_amplitudes(const GraphSpec &graph);

enum class GateKind : std::uint8_t {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    RZ,
    U1Q,
    CZ,
    CNOT,
    CU,
    MCX,
    GraphProjX,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_single_qubit_kind(GateKind kind);

/// One gate with its wiring.
///
/// Field use by kind:
///   single-qubit kinds   targets = {q}; RZ uses theta, U1Q uses unitary (2x2)
///   CZ                   targets = {a, b}
///   CNOT                 controls = {c}, targets = {t}
///   CU                   controls fire on |1>; unitary acts on targets
///   MCX                  X on targets[0] iff controls[i] == polarity[i] for all i
///   GraphProjX           X on targets[0] iff the register `controls` is in |G>
///                        (and extra_zero, when present, is |0>)
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Qubit> targets;
    std::vector<Qubit> controls;
    std::vector<std::uint8_t> polarity;
    Matrix unitary;
    double theta = 0;
    GraphSpec graph;
    std::optional<Qubit> extra_zero;

    bool operator==(const Gate &) const = default;
};

namespace gates {
Gate h(Qubit q);
Gate x(Qubit q);
Gate y(Qubit q);
Gate z(Qubit q);
Gate s(Qubit q);
Gate sdg(Qubit q);
Gate t(Qubit q);
Gate tdg(Qubit q);
Gate rz(Qubit q, double theta);
Gate u1q(Qubit q, Matrix u);
Gate cz(Qubit a, Qubit b);
Gate cnot(Qubit control, Qubit target);
Gate cu(std::vector<Qubit> controls, std::vector<Qubit> targets, Matrix u);
Gate mcx(std::vector<Qubit> controls, std::vector<std::uint8_t> polarity, Qubit target);
Gate graph_proj_x(GraphSpec graph, std::vector<Qubit> graph_register, Qubit target,
                  std::optional<Qubit> extra_zero = std::nullopt);
}  // namespace gates

/// 2x2 matrix of a single-qubit kind (RZ/U1Q read theta/unitary from `g`).
Matrix single_qubit_matrix(const Gate &g);

/// Every wire the gate touches, in the order used by local_matrix:
/// controls (or graph register / extra) first, targets last.
std::vector<Qubit> gate_qubits(const Gate &g);

/// Matrix of the gate on gate_qubits(g), built from its defining formula.
Matrix local_matrix(const Gate &g);

/// Full 2^m x 2^m realization of `g` on `context_qubits` wires.
/// Throws ResourceError above config.matrix_cap.
Matrix gate_matrix(const Gate &g, std::size_t context_qubits, const SimConfig &config = {});

enum class IssueKind : std::uint8_t { Structure, Wiring, Unitarity, Contract };

struct ValidationIssue {
    IssueKind kind;
    std::string message;
    bool operator==(const ValidationIssue &) const = default;
};

/// Structural problems of a gate in isolation (field shapes, repeated wires,
/// non-unitary matrices, bad graphs). Does not look at register size.
std::vector<ValidationIssue> gate_structure_issues(const Gate &g);

/// gate_structure_issues plus out-of-range wires for a `total_qubits` register.
std::vector<ValidationIssue> gate_issues(const Gate &g, std::size_t total_qubits);

/// Throws UnitarityError / WiringError / ContractError for the first issue.
void require_valid_gate(const Gate &g, std::size_t total_qubits);

Gate inverse(const Gate &g);
/// The same gate conditioned on `control` being |1>.
Gate controlled(const Gate &g, Qubit control);
/// Relabels every wire q to q + offset.
Gate shifted(const Gate &g, std::size_t offset);

}  // namespace dqc1

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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/distribution.h"
#include "dqc1/state.h"

namespace dqc1 {

/// H on every vertex followed by CZ on every edge; maps |0...0> to |G>.
/// Vertex v is placed on wires[v] (identity wiring when `wires` is empty).
std::vector<Gate> cluster_unitary(const GraphSpec &graph, std::span<const Qubit> wires = {});

/// |G> prepared by running cluster_unitary on |0...0>.
PureState cluster_state(const GraphSpec &graph);

/// W = X (x) |G><G| + I (x) (I - |G><G|) on (clean, register), emitted as
/// U_G^dagger, MCX(register all-zero -> clean), U_G.
std::vector<Gate> build_W(const GraphSpec &graph, Qubit clean, std::span<const Qubit> graph_register);

/// W' = X (x) |0><0| (x) |G><G| + I (x) (I - |0><0| (x) |G><G|) on
/// (clean, ancilla, register); the ancilla joins the all-zero control set.
std::vector<Gate> build_W_prime(const GraphSpec &graph, Qubit clean, Qubit ancilla,
                                std::span<const Qubit> graph_register);

enum class TracePart { Real, Imaginary };

/// One-clean-qubit trace circuit for an n-qubit unitary `u`: the clean qubit 0
/// gets H, controls u on wires 1..n, gets Sdg for the imaginary part, gets H,
/// and is measured. Pr(0) = 1/2 + Re tr(U) / 2^(n+1) (Im for the imaginary part).
Dqc1Circuit build_trace_circuit(const Circuit &u, TracePart part);

/// Measurement pattern on a graph state. Non-output vertex v is measured in
/// the basis whose byproduct-free vector is (|0> + e^{-i angles[v]}|1>)/sqrt2,
/// which applies J(theta) = H diag(1, e^{i theta}) along a linear cluster.
struct MbqcPattern {
    GraphSpec graph;
    std::map<std::size_t, double> angles;
    std::vector<std::size_t> outputs;

    /// Empty when valid.
    std::vector<std::string> errors() const;
    std::vector<std::size_t> non_outputs() const;
    bool operator==(const MbqcPattern &) const = default;
};

/// Linear cluster of angles.size() + 1 vertices; the last one is the output.
MbqcPattern pattern_from_rotations(std::span<const double> angles);

/// J(theta) = H diag(1, e^{i theta}).
Matrix rotation_step(double theta);

/// V(theta) = X J(theta): sends the byproduct-free measurement vector to |1>
/// and its orthogonal complement to |0>.
Matrix measurement_alignment(double theta);

/// prod_j J(angles[j]) |+>, computed on a single qubit.
PureState rotation_target(std::span<const double> angles);

/// Outcome distribution of the output vertices (in `outputs` order) on the
/// byproduct-free branch, computed by projecting |G> directly.
OutcomeDistribution byproduct_free_output(const MbqcPattern &pattern);

enum class ProjectorForm {
    /// U_G^dagger, MCX, U_G as emitted by build_W / build_W_prime.
    Decomposed,
    /// A single GraphProjX gate.
    Direct,
};

struct CompiledReduction {
    Dqc1Circuit circuit;
    PostselectionSpec postselect;
    std::vector<Qubit> output_qubits;
    MbqcPattern pattern;
};

/// The n+1-measurement construction: W on (0, 1..n), then V_j on each
/// non-output vertex, every qubit measured, postselect clean and all
/// non-output qubits on 1.
CompiledReduction compile_n_plus_1(const MbqcPattern &pattern, ProjectorForm form = ProjectorForm::Decomposed);

/// The three-measurement construction: W' on (0, ancilla 1, register 2..n+1),
/// V_j on non-output vertices, MCX ANDing the non-output vertices into the
/// ancilla; measures [clean, ancilla, output] and postselects clean = ancilla = 1.
/// Throws ContractError unless the pattern has exactly one output.
CompiledReduction compile_three(const MbqcPattern &pattern, ProjectorForm form = ProjectorForm::Decomposed);

/// {"graph": {"n": 3, "edges": [[0,1],[1,2]]}, "angles": {"0": 0.5, "1": 0.0}, "outputs": [2]}
MbqcPattern parse_pattern(std::string_view text);
std::string serialize_pattern(const MbqcPattern &pattern);

}  // namespace dqc1

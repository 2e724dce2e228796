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
#include <map>
#include <vector>

#include "dqc1/gate.h"

namespace dqc1 {

/// Ordered gate list on a fixed register.
struct Circuit {
    std::size_t total_qubits = 0;
    std::vector<Gate> gates;

    Circuit &add(Gate g) {
        gates.push_back(std::move(g));
        return *this;
    }
    Circuit &append(const std::vector<Gate> &more) {
        gates.insert(gates.end(), more.begin(), more.end());
        return *this;
    }
    bool operator==(const Circuit &) const = default;
};

/// Conditioning event: each listed measured qubit must read the given bit.
struct PostselectionSpec {
    std::map<Qubit, std::uint8_t> assignments;

    bool empty() const { return assignments.empty(); }
    bool operator==(const PostselectionSpec &) const = default;
};

/// A circuit run on the highly-mixed input: |0> on every clean qubit, I/2 on
/// every other qubit, followed by a computational-basis measurement of the
/// `measured` qubits (in that order).
struct Dqc1Circuit {
    Circuit circuit;
    std::vector<Qubit> clean_qubits{0};
    std::vector<Qubit> measured;
    PostselectionSpec postselect;

    std::size_t total_qubits() const { return circuit.total_qubits; }
    /// Qubits not in clean_qubits, ascending.
    std::vector<Qubit> mixed_qubits() const;
    bool operator==(const Dqc1Circuit &) const = default;
};

/// Every invariant violation; empty means valid.
std::vector<ValidationIssue> validate(const Circuit &c);
std::vector<ValidationIssue> validate(const Dqc1Circuit &c);

/// Throws ValidationError (or WiringError/UnitarityError for gate wiring and
/// matrices) listing every issue.
void require_valid(const Circuit &c);
void require_valid(const Dqc1Circuit &c);

/// Dense unitary of the whole circuit (product of gate_matrix in order).
Matrix circuit_matrix(const Circuit &c, const SimConfig &config = {});

}  // namespace dqc1

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

#include <string>
#include <string_view>

#include "dqc1/circuit.h"

namespace dqc1 {

/// Reads the circuit document:
///
///   {"total_qubits": 3, "clean_qubits": [0], "measure": [0, 2],
///    "postselect": {"2": 1},
///    "gates": [{"g": "H", "q": [0]}, {"g": "MCX", "c": [1, 2], "pol": [0, 1], "q": [0]}, ...]}
///
/// Gate fields: "g" kind, "q" targets, "c" controls (the graph register for
/// GraphProjX), "pol", "u" (row-major [[re, im], ...] rows), "theta",
/// "graph" {"n", "edges"}, "extra_zero".
///
/// Throws ParseError (with a location such as "gates[2].pol") for malformed
/// text or a gate that is ill-formed on its own, ValidationError when the
/// document is well-formed but violates a circuit invariant.
Dqc1Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Dqc1Circuit &c);

/// Bare unitary document: only "total_qubits" and "gates" are read; any
/// clean_qubits / measure / postselect fields are ignored.
Circuit parse_unitary(std::string_view text);

}  // namespace dqc1

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

#include <random>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/distribution.h"

namespace dqc1 {

/// Haar-random 2x2 unitary (Gram-Schmidt on a complex Gaussian matrix).
Matrix random_unitary_2x2(std::mt19937_64 &rng);

struct RandomCircuitOptions {
    bool allow_matrices = true;     ///< U1Q and single-target CU
    bool allow_mcx = true;          ///< MCX with random polarities
    bool allow_graph_proj = true;   ///< GraphProjX on small random graphs
};

/// Random valid circuit drawing from every gate kind allowed by `options`.
Circuit random_circuit(std::size_t total_qubits, std::size_t num_gates, std::mt19937_64 &rng,
                       const RandomCircuitOptions &options = {});

/// Erdos-Renyi graph with edge probability `p`.
GraphSpec random_graph(std::size_t num_vertices, double p, std::mt19937_64 &rng);

/// Random distribution over `measured`; each entry is zero with probability
/// `zero_fraction` (at least one entry stays positive).
OutcomeDistribution random_distribution(std::vector<Qubit> measured, std::mt19937_64 &rng,
                                        double zero_fraction = 0.0);

}  // namespace dqc1

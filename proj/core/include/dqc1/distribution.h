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

#include "dqc1/matrix.h"

namespace dqc1 {

/// Normalized distribution over the outcomes of a set of measured qubits.
///
/// Outcome index bit j (counting from the most significant of k bits) is the
/// reading of measured_qubits()[j]; bitstrings are written in the same order.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;
    /// Validates size 2^k, entries in [0,1] and unit total.
    OutcomeDistribution(std::vector<Qubit> measured, std::vector<double> probs);

    /// Keys are k-character bitstrings; missing keys are zero.
    static OutcomeDistribution from_map(std::vector<Qubit> measured, const std::map<std::string, double> &probs);

    const std::vector<Qubit> &measured_qubits() const { return measured_; }
    std::size_t num_bits() const { return measured_.size(); }
    std::span<const double> probs() const { return probs_; }
    double operator[](BasisIndex outcome) const { return probs_[outcome]; }
    double probability(std::string_view bits) const;

    std::string bitstring(BasisIndex outcome) const;
    BasisIndex outcome_index(std::string_view bits) const;
    /// Nonzero entries keyed by bitstring (all entries with include_zeros).
    std::map<std::string, double> as_map(bool include_zeros = false) const;

    bool operator==(const OutcomeDistribution &) const = default;

   private:
    std::vector<Qubit> measured_;
    std::vector<double> probs_;
};

/// Sums out every measured qubit not in `subset`; result is ordered by `subset`.
/// Throws ContractError unless subset is a duplicate-free subset of the
/// measured qubits.
OutcomeDistribution marginal(const OutcomeDistribution &d, std::span<const Qubit> subset);

/// Half the L1 distance. Both must measure the same qubits in the same order.
double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b);

/// {"measured": [...], "probs": {"bitstring": p, ...}}
std::string serialize_distribution(const OutcomeDistribution &d);
OutcomeDistribution parse_distribution(std::string_view text);

}  // namespace dqc1

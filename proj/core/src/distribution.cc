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

#include "dqc1/distribution.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "dqc1/config.h"
#include "dqc1/errors.h"
#include "json.hpp"

namespace dqc1 {

OutcomeDistribution::OutcomeDistribution(std::vector<Qubit> measured, std::vector<double> probs)
    : measured_(std::move(measured)), probs_(std::move(probs)) {
    if (measured_.size() >= 63 || probs_.size() != (std::size_t{1} << measured_.size())) {
        throw ContractError("distribution over " + std::to_string(measured_.size()) + " bits needs " +
                            std::to_string(std::size_t{1} << measured_.size()) + " entries");
    }
    double total = 0;
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0 + tol::kProbabilitySum)) {
            throw ContractError("probability " + std::to_string(p) + " outside [0,1]");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol::kProbabilitySum) {
        throw ContractError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

OutcomeDistribution OutcomeDistribution::from_map(std::vector<Qubit> measured,
                                                  const std::map<std::string, double> &probs) {
    std::vector<double> dense(std::size_t{1} << measured.size());
    OutcomeDistribution shape;
    shape.measured_ = measured;
    for (const auto &[bits, p] : probs) {
        dense[shape.outcome_index(bits)] += p;
    }
    return OutcomeDistribution(std::move(measured), std::move(dense));
}

double OutcomeDistribution::probability(std::string_view bits) const {
    return probs_[outcome_index(bits)];
}

std::string OutcomeDistribution::bitstring(BasisIndex outcome) const {
    const std::size_t k = measured_.size();
    std::string s(k, '0');
    for (std::size_t j = 0; j < k; ++j) {
        if ((outcome >> (k - 1 - j)) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

BasisIndex OutcomeDistribution::outcome_index(std::string_view bits) const {
    if (bits.size() != measured_.size()) {
        throw ContractError("bitstring '" + std::string(bits) + "' does not have " + std::to_string(measured_.size()) +
                            " bits");
    }
    BasisIndex out = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw ContractError("bitstring '" + std::string(bits) + "' contains a non-binary character");
        }
        out = (out << 1) | (ch == '1');
    }
    return out;
}

std::map<std::string, double> OutcomeDistribution::as_map(bool include_zeros) const {
    std::map<std::string, double> out;
    for (BasisIndex i = 0; i < probs_.size(); ++i) {
        if (include_zeros || probs_[i] != 0.0) {
            out.emplace(bitstring(i), probs_[i]);
        }
    }
    return out;
}

OutcomeDistribution marginal(const OutcomeDistribution &d, std::span<const Qubit> subset) {
    const auto &measured = d.measured_qubits();
    std::vector<Qubit> positions;
    std::set<Qubit> seen;
    for (Qubit q : subset) {
        auto it = std::find(measured.begin(), measured.end(), q);
        if (it == measured.end()) {
            throw ContractError("marginal: qubit " + std::to_string(q) + " is not measured");
        }
        if (!seen.insert(q).second) {
            throw ContractError("marginal: qubit " + std::to_string(q) + " listed twice");
        }
        positions.push_back(static_cast<Qubit>(it - measured.begin()));
    }
    std::vector<double> out(std::size_t{1} << subset.size());
    const auto probs = d.probs();
    for (BasisIndex i = 0; i < probs.size(); ++i) {
        out[gather_bits(i, positions, d.num_bits())] += probs[i];
    }
    return OutcomeDistribution({subset.begin(), subset.end()}, std::move(out));
}

double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    if (a.measured_qubits() != b.measured_qubits()) {
        throw ContractError("total_variation: distributions measure different qubits");
    }
    double sum = 0;
    for (std::size_t i = 0; i < a.probs().size(); ++i) {
        sum += std::abs(a[i] - b[i]);
    }
    return sum / 2;
}

std::string serialize_distribution(const OutcomeDistribution &d) {
    nlohmann::ordered_json doc;
    doc["measured"] = d.measured_qubits();
    nlohmann::ordered_json probs = nlohmann::ordered_json::object();
    for (const auto &[bits, p] : d.as_map()) {
        probs[bits] = p;
    }
    doc["probs"] = std::move(probs);
    return doc.dump(2);
}

OutcomeDistribution parse_distribution(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("", "distribution document must be an object");
    }
    if (!doc.contains("measured") || !doc["measured"].is_array()) {
        throw ParseError("measured", "missing integer array");
    }
    if (!doc.contains("probs") || !doc["probs"].is_object()) {
        throw ParseError("probs", "missing object");
    }
    std::vector<Qubit> measured;
    for (const auto &q : doc["measured"]) {
        if (!q.is_number_unsigned()) {
            throw ParseError("measured", "entries must be non-negative integers");
        }
        measured.push_back(q.get<Qubit>());
    }
    std::map<std::string, double> probs;
    for (const auto &[bits, p] : doc["probs"].items()) {
        if (!p.is_number()) {
            throw ParseError("probs." + bits, "probability must be a number");
        }
        probs[bits] = p.get<double>();
    }
    try {
        return OutcomeDistribution::from_map(std::move(measured), probs);
    } catch (const ContractError &e) {
        throw ValidationError(e.what());
    }
}

}  // namespace dqc1

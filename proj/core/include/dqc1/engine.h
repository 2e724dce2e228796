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
#include <string>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/config.h"
#include "dqc1/distribution.h"
#include "dqc1/state.h"

namespace dqc1 {

/// The highly-mixed input |0><0| on every clean qubit, I/2 on the rest.
/// Throws ResourceError above config.density_cap.
DensityMatrix build_input(const Dqc1Circuit &c, const SimConfig &config = {});

/// The same input as a uniform ensemble of computational basis states: the
/// clean qubits read 0 and the mixed qubits range over all 2^n_mixed values.
class MixtureInput {
   public:
    explicit MixtureInput(const Dqc1Circuit &c);

    std::size_t num_members() const { return std::size_t{1} << mixed_.size(); }
    double weight() const { return 1.0 / static_cast<double>(num_members()); }
    /// Basis index of ensemble member `k` (bits of k spread onto the mixed qubits).
    BasisIndex member(std::uint64_t k) const;
    const std::vector<Qubit> &mixed_qubits() const { return mixed_; }

   private:
    std::size_t total_qubits_;
    std::vector<Qubit> mixed_;
};

enum class ExactMethod { Auto, Density, Mixture };

/// Exact distribution of the measured qubits, ignoring c.postselect.
/// Auto uses density evolution up to config.density_cap and the mixture
/// average above it. Throws ResourceError above config.exact_cap (or above the
/// density cap when Density is forced).
OutcomeDistribution exact_distribution(const Dqc1Circuit &c, const SimConfig &config = {},
                                       ExactMethod method = ExactMethod::Auto);

/// Terminal measurement records. outcomes[i] packs the measured bits in the
/// order of `measured` (first measured qubit is the most significant bit).
struct ShotRecord {
    std::vector<Qubit> measured;
    std::vector<BasisIndex> outcomes;
    std::uint64_t seed = 0;

    std::size_t shot_count() const { return outcomes.size(); }
    std::string bitstring(std::size_t shot) const;
    std::map<std::string, std::size_t> counts() const;
    bool operator==(const ShotRecord &) const = default;
};

/// Draws `shots` i.i.d. samples: each shot picks a uniform basis state of the
/// mixed register and simulates it as a pure state. Shot i depends only on
/// (seed, i). Ignores c.postselect.
ShotRecord sample(const Dqc1Circuit &c, std::size_t shots, std::uint64_t seed, const SimConfig &config = {});

struct ConditionalDistribution {
    /// Distribution over the measured qubits that are not postselected.
    OutcomeDistribution distribution;
    /// Probability of the conditioning event itself.
    double event_probability = 0;
};

/// Bayes quotient P(x, event) / P(event) of a joint distribution.
/// Throws ContractError if a postselected qubit is not measured (or if every
/// measured qubit is postselected), PostselectionImpossibleError if the event
/// has probability zero.
ConditionalDistribution condition(const OutcomeDistribution &joint, const PostselectionSpec &ps);

ConditionalDistribution conditional_distribution(const Dqc1Circuit &c, const PostselectionSpec &ps,
                                                 const SimConfig &config = {});

/// Probability that every clean qubit reads 0. Requires the measured set to
/// equal the clean set (ContractError otherwise).
double all_zeros_probability(const Dqc1Circuit &c, const SimConfig &config = {});

}  // namespace dqc1

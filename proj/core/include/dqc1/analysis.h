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
#include <optional>
#include <string>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/distribution.h"
#include "dqc1/gadgets.h"

namespace dqc1 {

struct TraceEstimate {
    /// Estimate of Re tr(U)/2^n (or Im for the imaginary part), 2 p0 - 1.
    double normalized_trace_part = 0;
    /// 2 sqrt(p0 (1 - p0) / shots).
    double std_error = 0;
    std::size_t shots = 0;
    TracePart part = TracePart::Real;
};

/// Samples the trace circuit of `u` and converts the clean-qubit zero
/// frequency into a normalized-trace estimate.
TraceEstimate estimate_trace(const Circuit &u, TracePart part, std::size_t shots, std::uint64_t seed,
                             const SimConfig &config = {});

/// Smallest c with P/c <= Q <= c P on every outcome of every marginal.
struct MultiplicativeErrorReport {
    /// Some outcome has exactly one of P, Q equal to zero.
    bool incomparable = false;
    /// Bitstring (over all measured qubits) where incomparability was found.
    std::string incomparable_outcome;
    /// Minimal c per marginal, keyed by the qubits kept (in measured order).
    std::map<std::vector<Qubit>, double> per_marginal_c;
    double worst_c = 1.0;
};

/// Both distributions must measure the same qubits (ContractError otherwise).
/// Evaluates every non-empty marginal; at most 16 measured qubits.
MultiplicativeErrorReport minimal_multiplicative_error(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// Minimal c for one pair of distributions over the same outcomes, without
/// taking marginals. nullopt when incomparable.
std::optional<double> pointwise_multiplicative_error(const OutcomeDistribution &p, const OutcomeDistribution &q);

struct ConditionalRatio {
    std::string outcome;
    double p = 0;
    double q = 0;
    /// q / p; 1 when both are zero.
    double ratio = 1;
    bool within = true;
    /// Ratio equals one of the bounds to 1e-12 relative.
    bool tight = false;
};

struct ConditionalBoundsReport {
    double c = 1;
    double lower = 1;  ///< 1 / c^2
    double upper = 1;  ///< c^2
    /// Joint pair satisfies the multiplicative bound with this c.
    bool joints_comparable = true;
    bool passed = true;
    bool tight = false;
    std::vector<ConditionalRatio> ratios;
    /// Outcome whose ratio is furthest from 1 in log scale.
    std::string binding_outcome;
    double binding_ratio = 1;
};

/// Checks (1/c^2) P(x|ps) <= Q(x|ps) <= c^2 P(x|ps) for every outcome x of the
/// non-postselected qubits. Throws PostselectionImpossibleError when either
/// joint gives the event probability zero.
ConditionalBoundsReport check_conditional_bounds(const OutcomeDistribution &p_joint,
                                                 const OutcomeDistribution &q_joint, const PostselectionSpec &ps,
                                                 double c);

enum class Verdict { InLanguage, OutOfLanguage, Inconclusive };

struct AcceptanceVerdict {
    double accept_probability = 0;
    double delta = 0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Applies the two thresholds 1/2 + delta and 1/2 - delta exactly.
AcceptanceVerdict classify_probability(double accept_probability, double delta);

/// Prob(output = 1 | ps) computed exactly, then classified.
AcceptanceVerdict classify_acceptance(const Dqc1Circuit &c, const PostselectionSpec &ps, Qubit output, double delta,
                                      const SimConfig &config = {});

/// 2^-(m-k) ||(<0^k| (x) I) U (|0^k> (x) I)||_F^2 where the first k wires of
/// `u` are the clean block.
double frobenius_block_norm(const Circuit &u, std::size_t k, const SimConfig &config = {});

std::string_view verdict_name(Verdict v);

}  // namespace dqc1

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

#include "dqc1/analysis.h"

#include <algorithm>
#include <cmath>

#include "dqc1/engine.h"
#include "dqc1/errors.h"

namespace dqc1 {

TraceEstimate estimate_trace(const Circuit &u, TracePart part, std::size_t shots, std::uint64_t seed,
                             const SimConfig &config) {
    if (shots == 0) {
        throw ContractError("estimate_trace: shots must be >= 1");
    }
    const ShotRecord record = sample(build_trace_circuit(u, part), shots, seed, config);
    const auto zeros = static_cast<double>(std::count(record.outcomes.begin(), record.outcomes.end(), BasisIndex{0}));
    const double p0 = zeros / static_cast<double>(shots);
    TraceEstimate out;
    out.normalized_trace_part = 2 * p0 - 1;
    out.std_error = 2 * std::sqrt(p0 * (1 - p0) / static_cast<double>(shots));
    out.shots = shots;
    out.part = part;
    return out;
}

std::optional<double> pointwise_multiplicative_error(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.probs().size() != q.probs().size()) {
        throw ContractError("distributions have different outcome counts");
    }
    double c = 1.0;
    for (std::size_t i = 0; i < p.probs().size(); ++i) {
        const double a = p[i], b = q[i];
        if (a == 0.0 && b == 0.0) {
            continue;
        }
        if (a == 0.0 || b == 0.0) {
            return std::nullopt;
        }
        c = std::max({c, a / b, b / a});
    }
    return c;
}

MultiplicativeErrorReport minimal_multiplicative_error(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.measured_qubits() != q.measured_qubits()) {
        throw ContractError("minimal_multiplicative_error: distributions measure different qubits");
    }
    const auto &measured = p.measured_qubits();
    const std::size_t k = measured.size();
    if (k > 16) {
        throw ResourceError("minimal_multiplicative_error: more than 16 measured qubits");
    }
    MultiplicativeErrorReport report;
    for (std::size_t i = 0; i < p.probs().size(); ++i) {
        if ((p[i] == 0.0) != (q[i] == 0.0)) {
            report.incomparable = true;
            report.incomparable_outcome = p.bitstring(i);
            return report;
        }
    }
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
        std::vector<Qubit> kept;
        for (std::size_t j = 0; j < k; ++j) {
            if ((subset >> (k - 1 - j)) & 1) {
                kept.push_back(measured[j]);
            }
        }
        const auto c = pointwise_multiplicative_error(marginal(p, kept), marginal(q, kept));
        // Equal supports on the joint imply equal supports on every marginal.
        report.per_marginal_c[kept] = *c;
        report.worst_c = std::max(report.worst_c, *c);
    }
    return report;
}

ConditionalBoundsReport check_conditional_bounds(const OutcomeDistribution &p_joint,
                                                 const OutcomeDistribution &q_joint, const PostselectionSpec &ps,
                                                 double c) {
    if (!(c >= 1.0)) {
        throw ContractError("check_conditional_bounds: c must be >= 1");
    }
    ConditionalBoundsReport report;
    report.c = c;
    report.upper = c * c;
    report.lower = 1.0 / report.upper;
    const auto joint_c = minimal_multiplicative_error(p_joint, q_joint);
    report.joints_comparable = !joint_c.incomparable && joint_c.worst_c <= c;

    const auto pc = condition(p_joint, ps).distribution;
    const auto qc = condition(q_joint, ps).distribution;
    double worst_log = -1;
    constexpr double kTight = 1e-12;
    for (std::size_t i = 0; i < pc.probs().size(); ++i) {
        ConditionalRatio r;
        r.outcome = pc.bitstring(i);
        r.p = pc[i];
        r.q = qc[i];
        if (r.p == 0.0 && r.q == 0.0) {
            r.ratio = 1.0;
        } else if (r.p == 0.0) {
            r.ratio = INFINITY;
        } else {
            r.ratio = r.q / r.p;
        }
        // Rounding in the conditioning sums may push an exactly-binding ratio
        // past the bound by a few ulps.
        r.within = r.ratio >= report.lower * (1 - kTight) && r.ratio <= report.upper * (1 + kTight);
        r.tight = std::abs(r.ratio - report.upper) <= kTight * report.upper ||
                  std::abs(r.ratio - report.lower) <= kTight * report.lower;
        report.passed &= r.within;
        report.tight |= r.tight;
        const double dev = r.ratio == 0.0 ? INFINITY : std::abs(std::log(r.ratio));
        if (dev > worst_log) {
            worst_log = dev;
            report.binding_outcome = r.outcome;
            report.binding_ratio = r.ratio;
        }
        report.ratios.push_back(std::move(r));
    }
    return report;
}

AcceptanceVerdict classify_probability(double accept_probability, double delta) {
    if (!(delta > 0.0 && delta < 0.5)) {
        throw ContractError("delta must lie in (0, 1/2)");
    }
    AcceptanceVerdict v{accept_probability, delta, Verdict::Inconclusive};
    if (accept_probability >= 0.5 + delta) {
        v.verdict = Verdict::InLanguage;
    } else if (accept_probability <= 0.5 - delta) {
        v.verdict = Verdict::OutOfLanguage;
    }
    return v;
}

AcceptanceVerdict classify_acceptance(const Dqc1Circuit &c, const PostselectionSpec &ps, Qubit output, double delta,
                                      const SimConfig &config) {
    if (std::find(c.measured.begin(), c.measured.end(), output) == c.measured.end()) {
        throw ContractError("output qubit " + std::to_string(output) + " is not measured");
    }
    if (ps.assignments.contains(output)) {
        throw ContractError("output qubit " + std::to_string(output) + " is postselected");
    }
    const auto cond = conditional_distribution(c, ps, config).distribution;
    const Qubit only[] = {output};
    return classify_probability(marginal(cond, only)[1], delta);
}

double frobenius_block_norm(const Circuit &u, std::size_t k, const SimConfig &config) {
    if (k > u.total_qubits) {
        throw ContractError("frobenius_block_norm: k exceeds the register size");
    }
    if (u.total_qubits > config.density_cap) {
        throw ResourceError("frobenius_block_norm: " + std::to_string(u.total_qubits) + " qubits exceeds cap " +
                            std::to_string(config.density_cap));
    }
    SimConfig dense = config;
    dense.matrix_cap = std::max(config.matrix_cap, config.density_cap);
    const Matrix full = circuit_matrix(u, dense);
    const std::size_t m = u.total_qubits;
    const std::size_t block = std::size_t{1} << (m - k);
    // Rows/columns with the first k bits zero are exactly indices < 2^(m-k).
    double sum = 0;
    for (std::size_t r = 0; r < block; ++r) {
        for (std::size_t c = 0; c < block; ++c) {
            sum += std::norm(full(r, c));
        }
    }
    return sum / static_cast<double>(block);
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::InLanguage:
            return "in-language";
        case Verdict::OutOfLanguage:
            return "out-of-language";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

}  // namespace dqc1

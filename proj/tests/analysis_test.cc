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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dense_oracle.h"
#include "dqc1/analysis.h"
#include "dqc1/engine.h"
#include "dqc1/errors.h"
#include "dqc1/random.h"

using namespace dqc1;

namespace {

OutcomeDistribution one_bit(double p0) {
    return OutcomeDistribution({0}, {p0, 1 - p0});
}

OutcomeDistribution two_bit(double a, double b, double c, double d) {
    return OutcomeDistribution({0, 1}, {a, b, c, d});
}

/// Reference minimal c over every marginal, by direct enumeration of
/// subsets and outcome sums.
double reference_c(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    const std::size_t k = p.num_bits();
    double worst = 1;
    for (std::size_t subset = 1; subset < (std::size_t{1} << k); subset++) {
        std::map<std::size_t, std::pair<double, double>> sums;
        for (std::size_t x = 0; x < p.probs().size(); x++) {
            std::size_t key = 0;
            for (std::size_t b = 0; b < k; b++) {
                if (subset >> (k - 1 - b) & 1) {
                    key = (key << 1) | (x >> (k - 1 - b) & 1);
                }
            }
            sums[key].first += p.probs()[x];
            sums[key].second += q.probs()[x];
        }
        for (auto [key, pq] : sums) {
            if (pq.first > 0) {
                worst = std::max({worst, pq.first / pq.second, pq.second / pq.first});
            }
        }
    }
    return worst;
}

}  // namespace

TEST(analysis, estimate_trace_identity_is_exact) {
    Circuit id{3, {}};
    auto est = estimate_trace(id, TracePart::Real, 1000, 9);
    EXPECT_EQ(est.normalized_trace_part, 1.0);
    EXPECT_EQ(est.std_error, 0.0);
    EXPECT_EQ(est.shots, 1000u);
}

TEST(analysis, estimate_trace_x_and_t) {
    Circuit x{1, {}};
    x.add(gates::x(0));
    auto ex = estimate_trace(x, TracePart::Real, 100000, 1);
    EXPECT_LT(std::abs(ex.normalized_trace_part), 5 * ex.std_error);

    Circuit t{1, {}};
    t.add(gates::t(0));
    auto et = estimate_trace(t, TracePart::Real, 1000000, 2);
    EXPECT_LT(std::abs(et.normalized_trace_part - (1 + std::sqrt(2.0) / 2) / 2), 5 * et.std_error);
    EXPECT_NEAR((1 + std::sqrt(2.0) / 2) / 2, 0.853553, 1e-6);
}

TEST(analysis, multiplicative_error_examples) {
    auto p = one_bit(0.5);
    auto same = minimal_multiplicative_error(p, p);
    EXPECT_FALSE(same.incomparable);
    EXPECT_EQ(same.worst_c, 1.0);

    auto r = minimal_multiplicative_error(p, one_bit(0.6));
    EXPECT_FALSE(r.incomparable);
    EXPECT_NEAR(r.worst_c, 1.25, 1e-15);

    auto uniform = two_bit(0.25, 0.25, 0.25, 0.25);
    auto hole = minimal_multiplicative_error(uniform, two_bit(0.5, 0.25, 0.25, 0.0));
    EXPECT_TRUE(hole.incomparable);
    EXPECT_EQ(hole.incomparable_outcome, "11");
    EXPECT_FALSE(pointwise_multiplicative_error(uniform, two_bit(0.5, 0.25, 0.25, 0.0)).has_value());
}

TEST(analysis, multiplicative_error_checks_every_marginal) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t k = 1 + trial % 4;
        std::vector<Qubit> measured;
        for (Qubit q = 0; q < k; q++) {
            measured.push_back(q);
        }
        auto p = random_distribution(measured, rng);
        auto q = random_distribution(measured, rng);
        auto report = minimal_multiplicative_error(p, q);
        ASSERT_FALSE(report.incomparable);
        EXPECT_NEAR(report.worst_c, reference_c(p, q), 1e-12 * report.worst_c);
        EXPECT_EQ(report.per_marginal_c.size(), (std::size_t{1} << k) - 1);
        // The full-set entry is the pointwise c.
        EXPECT_NEAR(report.per_marginal_c.at(measured), *pointwise_multiplicative_error(p, q), 1e-12);
    }
}

TEST(analysis, multiplicative_error_rejects_mismatched_qubits) {
    EXPECT_THROW(minimal_multiplicative_error(one_bit(0.5), OutcomeDistribution({1}, {0.5, 0.5})), ContractError);
}

TEST(analysis, conditional_bounds_examples) {
    auto p = two_bit(0.25, 0.25, 0.25, 0.25);
    PostselectionSpec first_zero{{{0, 0}}};

    auto same = check_conditional_bounds(p, p, first_zero, 1.0);
    EXPECT_TRUE(same.passed);
    for (const auto &r : same.ratios) {
        EXPECT_EQ(r.ratio, 1.0);
    }

    auto q = two_bit(0.3, 0.2, 0.2, 0.3);
    auto rep = check_conditional_bounds(p, q, first_zero, 1.25);
    EXPECT_TRUE(rep.passed);
    EXPECT_NEAR(rep.upper, 1.5625, 1e-15);
    EXPECT_NEAR(rep.lower, 1 / 1.5625, 1e-15);
    ASSERT_EQ(rep.ratios.size(), 2u);
    EXPECT_NEAR(rep.ratios[0].ratio, 1.2, 1e-12);
    EXPECT_NEAR(rep.ratios[1].ratio, 0.8, 1e-12);

    auto fail = check_conditional_bounds(p, q, first_zero, 1.01);
    EXPECT_FALSE(fail.passed);
    EXPECT_FALSE(fail.joints_comparable);
    EXPECT_FALSE(fail.binding_outcome.empty());
    EXPECT_NEAR(fail.binding_ratio, 0.8, 1e-12);
}

TEST(analysis, conditional_bounds_tightness) {
    auto p = two_bit(0.25, 0.25, 0.25, 0.25);
    auto tight = check_conditional_bounds(p, p, PostselectionSpec{{{0, 1}}}, 1.0);
    EXPECT_TRUE(tight.passed);
    EXPECT_TRUE(tight.tight);
    auto loose = check_conditional_bounds(p, p, PostselectionSpec{{{0, 1}}}, 2.0);
    EXPECT_TRUE(loose.passed);
    EXPECT_FALSE(loose.tight);
}

TEST(analysis, conditional_bounds_impossible_event) {
    auto p = two_bit(0.5, 0.5, 0.0, 0.0);
    EXPECT_THROW(check_conditional_bounds(p, p, PostselectionSpec{{{0, 1}}}, 1.0), PostselectionImpossibleError);
}

TEST(analysis, conditional_bounds_hold_for_random_pairs) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; trial++) {
        std::vector<Qubit> measured{0, 1, 2};
        auto p = random_distribution(measured, rng);
        auto q = random_distribution(measured, rng);
        const double c = *pointwise_multiplicative_error(p, q);
        auto rep = check_conditional_bounds(p, q, PostselectionSpec{{{trial % 3, trial % 2}}}, c);
        EXPECT_TRUE(rep.joints_comparable);
        EXPECT_TRUE(rep.passed) << trial;
    }
}

TEST(analysis, classify_probability_thresholds) {
    EXPECT_EQ(classify_probability(1.0, 0.4).verdict, Verdict::InLanguage);
    EXPECT_EQ(classify_probability(0.0, 0.4).verdict, Verdict::OutOfLanguage);
    for (double delta : {1e-9, 0.1, 0.49}) {
        EXPECT_EQ(classify_probability(0.5, delta).verdict, Verdict::Inconclusive);
    }
    EXPECT_EQ(classify_probability(0.9, 0.4).verdict, Verdict::InLanguage);
    EXPECT_EQ(classify_probability(0.05, 0.4).verdict, Verdict::OutOfLanguage);
    EXPECT_EQ(classify_probability(0.89, 0.4).verdict, Verdict::Inconclusive);
    EXPECT_THROW(classify_probability(0.5, 0.0), ContractError);
    EXPECT_THROW(classify_probability(0.5, 0.5), ContractError);
    EXPECT_EQ(verdict_name(Verdict::InLanguage), "in-language");
}

TEST(analysis, classify_acceptance_on_circuits) {
    Dqc1Circuit one;
    one.circuit = {2, {}};
    one.circuit.add(gates::x(0));
    one.measured = {0, 1};
    auto yes = classify_acceptance(one, PostselectionSpec{{{1, 0}}}, 0, 0.4);
    EXPECT_EQ(yes.verdict, Verdict::InLanguage);
    EXPECT_NEAR(yes.accept_probability, 1.0, 1e-15);

    Dqc1Circuit zero;
    zero.circuit = {2, {}};
    zero.measured = {0, 1};
    EXPECT_EQ(classify_acceptance(zero, PostselectionSpec{{{1, 1}}}, 0, 0.4).verdict, Verdict::OutOfLanguage);

    Dqc1Circuit never = zero;
    EXPECT_THROW(classify_acceptance(never, PostselectionSpec{{{0, 1}}}, 1, 0.4), PostselectionImpossibleError);
}

TEST(analysis, frobenius_block_norm_examples) {
    Circuit id{2, {}};
    EXPECT_NEAR(frobenius_block_norm(id, 1), 1.0, 1e-15);

    Circuit h{2, {}};
    h.add(gates::h(0));
    EXPECT_NEAR(frobenius_block_norm(h, 1), 0.5, 1e-15);

    SimConfig cfg;
    cfg.density_cap = 3;
    Circuit big{4, {}};
    EXPECT_THROW(frobenius_block_norm(big, 1, cfg), ResourceError);
}

TEST(analysis, all_zeros_equals_block_norm) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; trial++) {
        const std::size_t k = 1 + trial % 2;
        const std::size_t n = 1 + trial % 5;
        Dqc1Circuit c;
        c.circuit = random_circuit(k + n, 12, rng);
        c.clean_qubits.clear();
        for (Qubit q = 0; q < k; q++) {
            c.clean_qubits.push_back(q);
        }
        c.measured = c.clean_qubits;

        // Reference block norm from the oracle operator.
        const auto u = oracle::circuit_operator(c.circuit.gates, k + n);
        const std::size_t block = std::size_t{1} << n;
        double fro = 0;
        for (std::size_t r = 0; r < block; r++) {
            for (std::size_t s = 0; s < block; s++) {
                fro += std::norm(u(r, s));
            }
        }
        const double expected = fro / static_cast<double>(block);
        EXPECT_NEAR(all_zeros_probability(c), expected, 1e-10);
        EXPECT_NEAR(frobenius_block_norm(c.circuit, k), expected, 1e-10);
    }
}

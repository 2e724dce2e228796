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
#include "dqc1/engine.h"
#include "dqc1/errors.h"
#include "dqc1/gadgets.h"
#include "dqc1/random.h"

using namespace dqc1;

namespace {

Dqc1Circuit bare(std::size_t total, std::vector<Qubit> measured) {
    Dqc1Circuit c;
    c.circuit.total_qubits = total;
    c.measured = std::move(measured);
    return c;
}

}  // namespace

TEST(engine, build_input_examples) {
    auto one = build_input(bare(1, {0}));
    EXPECT_EQ(one.matrix(), (Matrix{{1, 0}, {0, 0}}));

    auto two = build_input(bare(2, {0}));
    Matrix expected(4, 4);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.5;
    EXPECT_EQ(two.matrix(), expected);

    auto three = build_input(bare(3, {0}));
    for (BasisIndex k = 0; k < 8; k++) {
        EXPECT_EQ(three(k, k), Complex(k < 4 ? 0.25 : 0.0));
    }
    EXPECT_NEAR(three.trace().real(), 1.0, 1e-15);
}

TEST(engine, build_input_respects_cap) {
    SimConfig cfg;
    cfg.density_cap = 3;
    EXPECT_THROW(build_input(bare(4, {0}), cfg), ResourceError);
}

TEST(engine, mixture_members_cover_mixed_register) {
    auto c = bare(3, {0});
    c.clean_qubits = {1};
    MixtureInput mix(c);
    EXPECT_EQ(mix.num_members(), 4u);
    EXPECT_EQ(mix.mixed_qubits(), (std::vector<Qubit>{0, 2}));
    std::vector<BasisIndex> members;
    for (std::uint64_t k = 0; k < mix.num_members(); k++) {
        members.push_back(mix.member(k));
    }
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, (std::vector<BasisIndex>{0b000, 0b001, 0b100, 0b101}));
}

TEST(engine, exact_examples) {
    auto clean = exact_distribution(bare(2, {0}));
    EXPECT_EQ(clean.probability("0"), 1.0);

    auto mixed = exact_distribution(bare(2, {1}));
    EXPECT_NEAR(mixed.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(mixed.probability("1"), 0.5, 1e-15);

    Circuit t{1, {}};
    t.add(gates::t(0));
    auto trace = build_trace_circuit(t, TracePart::Real);
    for (auto method : {ExactMethod::Density, ExactMethod::Mixture}) {
        auto d = exact_distribution(trace, {}, method);
        EXPECT_NEAR(d.probability("0"), 0.5 + (1 + std::sqrt(2.0) / 2) / 4, 1e-12);
        EXPECT_NEAR(d.probability("0"), 0.926777, 1e-6);
        EXPECT_NEAR(d.probability("1"), 0.073223, 1e-6);
    }
}

TEST(engine, exact_matches_dense_oracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; trial++) {
        const std::size_t m = 1 + trial % 6;
        Dqc1Circuit c;
        c.circuit = random_circuit(m, 14, rng);
        c.measured = {0};
        if (m > 2) {
            c.measured.push_back(m - 1);
            c.clean_qubits = {0, 1};
        }
        const auto expected = oracle::distribution(c);
        for (auto method : {ExactMethod::Density, ExactMethod::Mixture}) {
            auto d = exact_distribution(c, {}, method);
            for (std::size_t k = 0; k < expected.size(); k++) {
                EXPECT_NEAR(d.probs()[k], expected[k], 1e-12);
            }
        }
    }
}

TEST(engine, exact_cap_enforced) {
    SimConfig cfg;
    cfg.exact_cap = 4;
    EXPECT_THROW(exact_distribution(bare(5, {0}), cfg), ResourceError);
    cfg = {};
    cfg.density_cap = 2;
    EXPECT_THROW(exact_distribution(bare(3, {0}), cfg, ExactMethod::Density), ResourceError);
    // Auto falls back to the mixture path above the density cap.
    EXPECT_NO_THROW(exact_distribution(bare(3, {0}), cfg, ExactMethod::Auto));
}

TEST(engine, sample_clean_qubit_is_always_zero) {
    auto rec = sample(bare(3, {0}), 500, 17);
    EXPECT_EQ(rec.shot_count(), 500u);
    EXPECT_EQ(rec.counts(), (std::map<std::string, std::size_t>{{"0", 500}}));
}

TEST(engine, sample_mixed_qubit_binomial_band) {
    const std::size_t shots = 100000;
    auto rec = sample(bare(2, {1}), shots, 2024);
    const double f0 = static_cast<double>(rec.counts()["0"]) / shots;
    EXPECT_LT(std::abs(f0 - 0.5), 5 * 0.5 / std::sqrt(static_cast<double>(shots)));
}

TEST(engine, sample_is_deterministic) {
    std::mt19937_64 rng(5);
    Dqc1Circuit c;
    c.circuit = random_circuit(4, 12, rng);
    c.measured = {0, 2, 3};
    auto a = sample(c, 2000, 42);
    auto b = sample(c, 2000, 42);
    EXPECT_EQ(a, b);
    auto other = sample(c, 2000, 43);
    EXPECT_NE(a.outcomes, other.outcomes);
}

TEST(engine, sample_matches_exact_within_bands) {
    std::mt19937_64 rng(8);
    Dqc1Circuit c;
    c.circuit = random_circuit(4, 20, rng);
    c.measured = {0, 1};
    const std::size_t shots = 100000;
    auto exact = exact_distribution(c);
    auto counts = sample(c, shots, 77).counts();
    for (BasisIndex k = 0; k < 4; k++) {
        const double p = exact.probs()[k];
        const double f = static_cast<double>(counts[exact.bitstring(k)]) / shots;
        const double sigma = std::sqrt(p * (1 - p) / shots);
        EXPECT_LE(std::abs(f - p), 5 * sigma + 1e-12) << exact.bitstring(k);
    }
}

TEST(engine, condition_examples) {
    auto uniform = OutcomeDistribution::from_map({0, 1}, {{"00", 0.25}, {"01", 0.25}, {"10", 0.25}, {"11", 0.25}});
    PostselectionSpec first_one{{{0, 1}}};
    auto c1 = condition(uniform, first_one);
    EXPECT_NEAR(c1.distribution.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(c1.distribution.probability("1"), 0.5, 1e-15);
    EXPECT_NEAR(c1.event_probability, 0.5, 1e-15);

    auto ghz = OutcomeDistribution::from_map({0, 1}, {{"00", 0.5}, {"11", 0.5}});
    auto c2 = condition(ghz, first_one);
    EXPECT_NEAR(c2.distribution.probability("1"), 1.0, 1e-15);
    EXPECT_EQ(c2.distribution.measured_qubits(), std::vector<Qubit>{1});

    auto never = OutcomeDistribution::from_map({0, 1}, {{"00", 1.0}});
    EXPECT_THROW(condition(never, first_one), PostselectionImpossibleError);
}

TEST(engine, marginal_examples) {
    auto uniform = OutcomeDistribution::from_map({0, 1}, {{"00", 0.25}, {"01", 0.25}, {"10", 0.25}, {"11", 0.25}});
    std::vector<Qubit> first{0};
    auto m1 = marginal(uniform, first);
    EXPECT_NEAR(m1.probability("0"), 0.5, 1e-15);

    auto ghz = OutcomeDistribution::from_map({0, 1}, {{"00", 0.5}, {"11", 0.5}});
    std::vector<Qubit> second{1};
    auto m2 = marginal(ghz, second);
    EXPECT_NEAR(m2.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(m2.probability("1"), 0.5, 1e-15);

    std::vector<Qubit> both{0, 1};
    EXPECT_EQ(marginal(ghz, both).as_map(true), ghz.as_map(true));

    std::vector<Qubit> missing{2};
    EXPECT_THROW(marginal(ghz, missing), ContractError);
}

TEST(engine, distribution_rejects_bad_probabilities) {
    EXPECT_THROW(OutcomeDistribution({0}, {0.5, 0.6}), ContractError);
    EXPECT_THROW(OutcomeDistribution({0}, {1.0}), ContractError);
    EXPECT_THROW(OutcomeDistribution({0}, {1.5, -0.5}), ContractError);
}

TEST(engine, all_zeros_examples) {
    auto id = bare(2, {0});
    EXPECT_NEAR(all_zeros_probability(id), 1.0, 1e-15);

    auto h = bare(2, {0});
    h.circuit.add(gates::h(0));
    EXPECT_NEAR(all_zeros_probability(h), 0.5, 1e-15);

    auto swap = bare(2, {0});
    swap.circuit.add(gates::cnot(0, 1)).add(gates::cnot(1, 0)).add(gates::cnot(0, 1));
    EXPECT_NEAR(all_zeros_probability(swap), 0.5, 1e-15);

    auto wrong = bare(2, {1});
    EXPECT_THROW(all_zeros_probability(wrong), ContractError);
}

TEST(engine, conditional_distribution_of_w_branch) {
    auto w = build_W(GraphSpec::linear(2), 0, std::vector<Qubit>{1, 2});
    Dqc1Circuit c;
    c.circuit = {3, w};
    c.measured = {0, 1, 2};
    auto cond = conditional_distribution(c, PostselectionSpec{{{0, 1}}});
    EXPECT_NEAR(cond.event_probability, 0.25, 1e-12);
    for (const char *bits : {"00", "01", "10", "11"}) {
        EXPECT_NEAR(cond.distribution.probability(bits), 0.25, 1e-12);
    }
}

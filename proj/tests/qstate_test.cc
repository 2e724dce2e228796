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
#include <vector>

#include "dense_oracle.h"
#include "dqc1/errors.h"
#include "dqc1/random.h"
#include "dqc1/state.h"

using namespace dqc1;

namespace {

const double kR = 1 / std::sqrt(2.0);

std::vector<Qubit> qs(std::initializer_list<Qubit> l) {
    return l;
}

}  // namespace

TEST(qstate, h_on_zero) {
    PureState psi(1);
    psi.apply(gates::h(0));
    EXPECT_NEAR(std::abs(psi.amplitude(0) - Complex{kR}), 0, 1e-15);
    EXPECT_NEAR(std::abs(psi.amplitude(1) - Complex{kR}), 0, 1e-15);
}

TEST(qstate, x_on_one) {
    auto psi = PureState::basis(1, 1);
    psi.apply(gates::x(0));
    EXPECT_EQ(psi.amplitude(0), Complex{1});
    EXPECT_EQ(psi.amplitude(1), Complex{0});
}

TEST(qstate, cz_on_plus_plus) {
    PureState psi(2);
    psi.apply(gates::h(0));
    psi.apply(gates::h(1));
    psi.apply(gates::cz(0, 1));
    const std::vector<Complex> expected{0.5, 0.5, 0.5, -0.5};
    for (BasisIndex k = 0; k < 4; k++) {
        EXPECT_NEAR(std::abs(psi.amplitude(k) - expected[k]), 0, 1e-15) << k;
    }
}

TEST(qstate, qubit_zero_is_most_significant) {
    PureState psi(3);
    psi.apply(gates::x(0));
    EXPECT_EQ(psi.amplitude(0b100), Complex{1});
}

TEST(qstate, apply_rejects_bad_wiring_and_matrices) {
    PureState psi(2);
    EXPECT_THROW(psi.apply(gates::h(2)), WiringError);
    EXPECT_THROW(psi.apply(gates::cz(1, 1)), WiringError);
    EXPECT_THROW(psi.apply(gates::u1q(0, Matrix{{1, 1}, {0, 1}})), UnitarityError);
    EXPECT_THROW(PureState(40), ResourceError);
}

TEST(qstate, density_identity_and_h) {
    DensityMatrix rho(1);
    auto same = evolve_density(rho, gates::u1q(0, Matrix::identity(2)));
    EXPECT_EQ(same.matrix(), rho.matrix());

    auto plus = evolve_density(rho, gates::h(0));
    for (BasisIndex r = 0; r < 2; r++) {
        for (BasisIndex c = 0; c < 2; c++) {
            EXPECT_NEAR(std::abs(plus(r, c) - Complex{0.5}), 0, 1e-15);
        }
    }
}

TEST(qstate, maximally_mixed_is_x_invariant) {
    // |0><0| (x) I/2 = diag(1/2, 1/2, 0, 0).
    Matrix m(4, 4);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    auto rho = DensityMatrix::from_matrix(m);
    auto out = evolve_density(rho, gates::x(1));
    EXPECT_LT(out.matrix().max_abs_diff(m), 1e-15);
}

TEST(qstate, density_rejects_non_hermitian_input) {
    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(m), ContractError);
}

TEST(qstate, measure_probs_examples) {
    auto zero = measure_probs(PureState(1), qs({0}));
    EXPECT_EQ(zero.probability("0"), 1.0);

    auto plus = apply_gate(PureState(1), gates::h(0));
    auto p = measure_probs(plus, qs({0}));
    EXPECT_NEAR(p.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(p.probability("1"), 0.5, 1e-15);

    auto bell = PureState::from_amplitudes({kR, 0, 0, kR});
    auto b = measure_probs(bell, qs({1}));
    EXPECT_NEAR(b.probability("0"), 0.5, 1e-15);
    EXPECT_NEAR(b.probability("1"), 0.5, 1e-15);

    auto joint = measure_probs(bell, qs({1, 0}));
    EXPECT_NEAR(joint.probability("11"), 0.5, 1e-15);
    EXPECT_NEAR(joint.probability("10"), 0.0, 1e-15);
}

TEST(qstate, measure_probs_errors) {
    PureState psi(2);
    EXPECT_THROW(measure_probs(psi, qs({})), ContractError);
    EXPECT_THROW(measure_probs(psi, qs({0, 0})), ContractError);
    EXPECT_THROW(measure_probs(psi, qs({2})), WiringError);
    EXPECT_THROW(measure_probs(DensityMatrix(2), qs({})), ContractError);
}

TEST(qstate, fidelity_examples) {
    auto plus = apply_gate(PureState(1), gates::h(0));
    EXPECT_NEAR(fidelity(plus, plus), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(PureState(1), PureState::basis(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(fidelity(PureState(1), plus), 0.5, 1e-15);
    EXPECT_NEAR(fidelity(PureState(1), DensityMatrix::from_pure(plus)), 0.5, 1e-15);
    EXPECT_THROW(fidelity(PureState(1), PureState(2)), ContractError);
    EXPECT_THROW(fidelity(PureState(1), DensityMatrix(2)), ContractError);
}

TEST(qstate, every_gate_kind_matches_dense_oracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; trial++) {
        const std::size_t m = 2 + trial % 4;
        auto c = random_circuit(m, 12, rng);
        for (const Gate &g : c.gates) {
            const auto expected = oracle::gate_operator(g, m);
            EXPECT_LT(oracle::max_diff(expected, gate_matrix(g, m)), 1e-12) << gate_name(g.kind);
        }
    }
}

TEST(qstate, pure_and_density_paths_match_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; trial++) {
        const std::size_t m = 1 + trial % 5;
        auto c = random_circuit(m, 15, rng);
        const BasisIndex start = rng() % (BasisIndex{1} << m);

        auto psi = PureState::basis(m, start);
        auto rho = DensityMatrix::from_pure(psi);
        for (const Gate &g : c.gates) {
            psi.apply(g);
            rho.evolve(g);
        }
        const auto u = oracle::circuit_operator(c.gates, m);
        for (BasisIndex k = 0; k < psi.dimension(); k++) {
            EXPECT_NEAR(std::abs(psi.amplitude(k) - u(k, start)), 0, 1e-12);
            for (BasisIndex l = 0; l < psi.dimension(); l++) {
                EXPECT_NEAR(std::abs(rho(k, l) - u(k, start) * std::conj(u(l, start))), 0, 1e-12);
            }
        }
        EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
        EXPECT_LT(rho.hermiticity_residual(), 1e-12);
    }
}

TEST(qstate, inverse_undoes_gate) {
    std::mt19937_64 rng(3);
    auto c = random_circuit(4, 30, rng);
    PureState psi(4);
    for (const Gate &g : c.gates) {
        psi.apply(g);
    }
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        psi.apply(inverse(*it));
    }
    EXPECT_NEAR(std::abs(psi.amplitude(0)), 1.0, 1e-12);
}

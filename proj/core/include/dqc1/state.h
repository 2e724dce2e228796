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

#include <span>
#include <vector>

#include "dqc1/config.h"
#include "dqc1/distribution.h"
#include "dqc1/gate.h"
#include "dqc1/matrix.h"

namespace dqc1 {

/// Dense state vector over 2^num_qubits amplitudes.
class PureState {
   public:
    /// |0...0> on `num_qubits` qubits.
    explicit PureState(std::size_t num_qubits, const SimConfig &config = {});
    static PureState basis(std::size_t num_qubits, BasisIndex index, const SimConfig &config = {});
    /// Length must be a power of two and the norm 1 within tol::kNorm.
    static PureState from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(BasisIndex index) const { return amps_[index]; }
    double norm_squared() const;

    /// Applies `g` in place after checking wiring and unitarity.
    void apply(const Gate &g);
    /// Applies without checks. Callers guarantee `g` passed require_valid_gate.
    void apply_unchecked(const Gate &g);
    /// Resets to the basis state `index` without reallocating.
    void reset_to_basis(BasisIndex index);

    bool operator==(const PureState &) const = default;

   private:
    PureState() = default;
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Dense density operator on num_qubits qubits.
class DensityMatrix {
   public:
    /// |0...0><0...0|.
    explicit DensityMatrix(std::size_t num_qubits, const SimConfig &config = {});
    static DensityMatrix from_pure(const PureState &psi, const SimConfig &config = {});
    /// Requires a square 2^n matrix; does not check Hermiticity or trace.
    static DensityMatrix from_matrix(Matrix m);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return rho_.rows(); }
    const Matrix &matrix() const { return rho_; }
    Complex operator()(BasisIndex r, BasisIndex c) const { return rho_(r, c); }

    Complex trace() const { return rho_.trace(); }
    double hermiticity_residual() const;

    /// rho -> U rho U^dagger with U the realization of `g`.
    void evolve(const Gate &g);
    void evolve(const SparseOperator &u);

   private:
    DensityMatrix() = default;
    std::size_t num_qubits_ = 0;
    Matrix rho_;
};

PureState apply_gate(PureState state, const Gate &g);
DensityMatrix evolve_density(DensityMatrix rho, const Gate &g);

/// Computational-basis outcome distribution of `qubits` (ordered).
/// Throws ContractError on an empty or repeated list, WiringError out of range.
OutcomeDistribution measure_probs(const PureState &state, std::span<const Qubit> qubits);
OutcomeDistribution measure_probs(const DensityMatrix &rho, std::span<const Qubit> qubits);

/// |<a|b>|^2.
double fidelity(const PureState &a, const PureState &b);
/// <psi| rho |psi>, real part.
double fidelity(const PureState &psi, const DensityMatrix &rho);

}  // namespace dqc1

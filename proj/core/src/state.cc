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

#include "dqc1/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "dqc1/errors.h"

namespace dqc1 {

namespace {

std::size_t checked_dimension(std::size_t num_qubits, std::size_t cap, const char *what) {
    if (num_qubits > cap) {
        throw ResourceError(std::string(what) + ": " + std::to_string(num_qubits) + " qubits exceeds cap " +
                            std::to_string(cap));
    }
    return std::size_t{1} << num_qubits;
}

// Stride kernels. Each walks the amplitude pairs (or blocks) selected by the
// target bits and skips indices whose control bits do not match.

void apply_1q(std::vector<Complex> &amps, BasisIndex target_mask, BasisIndex ctrl_mask, BasisIndex ctrl_value,
              const Matrix &u) {
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::size_t dim = amps.size();
    const std::size_t stride = target_mask;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i = base + off;
            if ((i & ctrl_mask) != ctrl_value) {
                continue;
            }
            const std::size_t j = i | stride;
            const Complex a = amps[i], b = amps[j];
            amps[i] = u00 * a + u01 * b;
            amps[j] = u10 * a + u11 * b;
        }
    }
}

void apply_diag_1q(std::vector<Complex> &amps, BasisIndex target_mask, Complex d0, Complex d1) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= (i & target_mask) ? d1 : d0;
    }
}

void apply_block(std::vector<Complex> &amps, std::size_t num_qubits, std::span<const Qubit> targets,
                 BasisIndex ctrl_mask, BasisIndex ctrl_value, const Matrix &u) {
    const std::size_t k = targets.size();
    const std::size_t bdim = std::size_t{1} << k;
    BasisIndex tmask = 0;
    std::vector<BasisIndex> offsets(bdim);
    for (Qubit q : targets) {
        tmask |= qubit_mask(q, num_qubits);
    }
    for (std::size_t l = 0; l < bdim; ++l) {
        offsets[l] = scatter_bits(l, targets, num_qubits);
    }
    std::vector<Complex> in(bdim);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & tmask) || (i & ctrl_mask) != ctrl_value) {
            continue;
        }
        for (std::size_t l = 0; l < bdim; ++l) {
            in[l] = amps[i | offsets[l]];
        }
        for (std::size_t r = 0; r < bdim; ++r) {
            Complex acc = 0;
            for (std::size_t c = 0; c < bdim; ++c) {
                acc += u(r, c) * in[c];
            }
            amps[i | offsets[r]] = acc;
        }
    }
}

void apply_mcx(std::vector<Complex> &amps, BasisIndex target_mask, BasisIndex ctrl_mask, BasisIndex ctrl_value) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & target_mask) == 0 && (i & ctrl_mask) == ctrl_value) {
            std::swap(amps[i], amps[i | target_mask]);
        }
    }
}

void apply_cz(std::vector<Complex> &amps, BasisIndex both) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
}

// X (x) P + I (x) (I - P), P = [|0><0|_extra (x)] |G><G|_register.
// Within each block selected by the remaining wires, only the components
// along |G> (with extra = 0) of the target=0 and target=1 halves are swapped.
void apply_graph_proj_x(std::vector<Complex> &amps, std::size_t num_qubits, const Gate &g) {
    const BasisIndex tmask = qubit_mask(g.targets[0], num_qubits);
    BasisIndex involved = tmask;
    if (g.extra_zero) {
        involved |= qubit_mask(*g.extra_zero, num_qubits);
    }
    for (Qubit q : g.controls) {
        involved |= qubit_mask(q, num_qubits);
    }
    const auto graph_amps = graph_state_amplitudes(g.graph);
    const std::size_t rdim = graph_amps.size();
    std::vector<BasisIndex> offsets(rdim);
    for (std::size_t x = 0; x < rdim; ++x) {
        offsets[x] = scatter_bits(x, g.controls, num_qubits);
    }
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & involved) {
            continue;
        }
        Complex a0 = 0, a1 = 0;
        for (std::size_t x = 0; x < rdim; ++x) {
            const std::size_t i = base | offsets[x];
            a0 += std::conj(graph_amps[x]) * amps[i];
            a1 += std::conj(graph_amps[x]) * amps[i | tmask];
        }
        const Complex d = a1 - a0;
        if (d == Complex{}) {
            continue;
        }
        for (std::size_t x = 0; x < rdim; ++x) {
            const std::size_t i = base | offsets[x];
            amps[i] += graph_amps[x] * d;
            amps[i | tmask] -= graph_amps[x] * d;
        }
    }
}

BasisIndex mask_of(std::span<const Qubit> qs, std::size_t num_qubits) {
    BasisIndex m = 0;
    for (Qubit q : qs) {
        m |= qubit_mask(q, num_qubits);
    }
    return m;
}

void check_measured(std::span<const Qubit> qubits, std::size_t num_qubits) {
    if (qubits.empty()) {
        throw ContractError("measure_probs: empty qubit list");
    }
    std::set<Qubit> seen;
    for (Qubit q : qubits) {
        if (q >= num_qubits) {
            throw WiringError("measure_probs: qubit " + std::to_string(q) + " out of range");
        }
        if (!seen.insert(q).second) {
            throw ContractError("measure_probs: qubit " + std::to_string(q) + " listed twice");
        }
    }
}

}  // namespace

PureState::PureState(std::size_t num_qubits, const SimConfig &config)
    : num_qubits_(num_qubits), amps_(checked_dimension(num_qubits, config.pure_cap, "PureState")) {
    amps_[0] = 1.0;
}

PureState PureState::basis(std::size_t num_qubits, BasisIndex index, const SimConfig &config) {
    PureState s(num_qubits, config);
    if (index >= s.dimension()) {
        throw WiringError("basis index " + std::to_string(index) + " out of range");
    }
    s.reset_to_basis(index);
    return s;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw ContractError("amplitude count must be a power of two");
    }
    PureState s;
    s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1.0) > tol::kNorm) {
        throw ContractError("amplitudes are not normalized");
    }
    return s;
}

double PureState::norm_squared() const {
    double n = 0;
    for (const auto &a : amps_) {
        n += std::norm(a);
    }
    return n;
}

void PureState::reset_to_basis(BasisIndex index) {
    std::fill(amps_.begin(), amps_.end(), Complex{});
    amps_[index] = 1.0;
}

void PureState::apply(const Gate &g) {
    require_valid_gate(g, num_qubits_);
    apply_unchecked(g);
}

void PureState::apply_unchecked(const Gate &g) {
    const std::size_t m = num_qubits_;
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ: {
            const Matrix u = single_qubit_matrix(g);
            apply_diag_1q(amps_, qubit_mask(g.targets[0], m), u(0, 0), u(1, 1));
            return;
        }
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::U1Q:
            apply_1q(amps_, qubit_mask(g.targets[0], m), 0, 0, single_qubit_matrix(g));
            return;
        case GateKind::CZ:
            apply_cz(amps_, mask_of(g.targets, m));
            return;
        case GateKind::CNOT: {
            const BasisIndex c = qubit_mask(g.controls[0], m);
            apply_mcx(amps_, qubit_mask(g.targets[0], m), c, c);
            return;
        }
        case GateKind::CU: {
            const BasisIndex c = mask_of(g.controls, m);
            if (g.targets.size() == 1) {
                apply_1q(amps_, qubit_mask(g.targets[0], m), c, c, g.unitary);
            } else {
                apply_block(amps_, m, g.targets, c, c, g.unitary);
            }
            return;
        }
        case GateKind::MCX: {
            BasisIndex value = 0;
            for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (g.polarity[i]) {
                    value |= qubit_mask(g.controls[i], m);
                }
            }
            apply_mcx(amps_, qubit_mask(g.targets[0], m), mask_of(g.controls, m), value);
            return;
        }
        case GateKind::GraphProjX:
            apply_graph_proj_x(amps_, m, g);
            return;
    }
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, const SimConfig &config) : num_qubits_(num_qubits) {
    const std::size_t dim = checked_dimension(num_qubits, config.density_cap, "DensityMatrix");
    rho_ = Matrix(dim, dim);
    rho_(0, 0) = 1.0;
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi, const SimConfig &config) {
    checked_dimension(psi.num_qubits(), config.density_cap, "DensityMatrix");
    DensityMatrix out;
    out.num_qubits_ = psi.num_qubits();
    out.rho_ = outer(psi.amplitudes(), psi.amplitudes());
    return out;
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
    const std::size_t dim = m.rows();
    if (!m.is_square() || dim == 0 || (dim & (dim - 1)) != 0) {
        throw ContractError("density matrix must be square with power-of-two dimension");
    }
    DensityMatrix out;
    out.num_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
    out.rho_ = std::move(m);
    if (out.hermiticity_residual() > tol::kHermitian) {
        throw ContractError("density matrix is not Hermitian");
    }
    if (std::abs(out.trace() - Complex{1}) > tol::kTrace) {
        throw ContractError("density matrix trace is not 1");
    }
    // Diagonal entries of a PSD matrix are nonnegative; the full spectrum is
    // not computed here.
    for (std::size_t k = 0; k < dim; ++k) {
        if (out.rho_(k, k).real() < -tol::kEigenvalue) {
            throw ContractError("density matrix has a negative diagonal entry");
        }
    }
    return out;
}

double DensityMatrix::hermiticity_residual() const {
    double worst = 0;
    for (std::size_t r = 0; r < dimension(); ++r) {
        for (std::size_t c = r; c < dimension(); ++c) {
            worst = std::max(worst, std::abs(rho_(r, c) - std::conj(rho_(c, r))));
        }
    }
    return worst;
}

void DensityMatrix::evolve(const Gate &g) {
    require_valid_gate(g, num_qubits_);
    evolve(SparseOperator::embed(local_matrix(g), gate_qubits(g), num_qubits_));
}

void DensityMatrix::evolve(const SparseOperator &u) {
    if (u.dim() != dimension()) {
        throw ContractError("evolve: operator dimension mismatch");
    }
    // U rho U^dagger = U (U rho)^dagger, since the result is Hermitian.
    Matrix half = u.apply_left(rho_).adjoint();
    rho_ = u.apply_left(half);
}

PureState apply_gate(PureState state, const Gate &g) {
    state.apply(g);
    return state;
}

DensityMatrix evolve_density(DensityMatrix rho, const Gate &g) {
    rho.evolve(g);
    return rho;
}

OutcomeDistribution measure_probs(const PureState &state, std::span<const Qubit> qubits) {
    check_measured(qubits, state.num_qubits());
    std::vector<double> probs(std::size_t{1} << qubits.size());
    const auto amps = state.amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        probs[gather_bits(i, qubits, state.num_qubits())] += std::norm(amps[i]);
    }
    return OutcomeDistribution({qubits.begin(), qubits.end()}, std::move(probs));
}

OutcomeDistribution measure_probs(const DensityMatrix &rho, std::span<const Qubit> qubits) {
    check_measured(qubits, rho.num_qubits());
    std::vector<double> probs(std::size_t{1} << qubits.size());
    for (BasisIndex i = 0; i < rho.dimension(); ++i) {
        probs[gather_bits(i, qubits, rho.num_qubits())] += rho(i, i).real();
    }
    for (auto &p : probs) {
        p = std::max(p, 0.0);
    }
    return OutcomeDistribution({qubits.begin(), qubits.end()}, std::move(probs));
}

double fidelity(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ContractError("fidelity: qubit count mismatch");
    }
    Complex overlap = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return std::norm(overlap);
}

double fidelity(const PureState &psi, const DensityMatrix &rho) {
    if (psi.num_qubits() != rho.num_qubits()) {
        throw ContractError("fidelity: qubit count mismatch");
    }
    Complex acc = 0;
    for (std::size_t r = 0; r < rho.dimension(); ++r) {
        const Complex pr = std::conj(psi.amplitude(r));
        if (pr == Complex{}) {
            continue;
        }
        for (std::size_t c = 0; c < rho.dimension(); ++c) {
            acc += pr * rho(r, c) * psi.amplitude(c);
        }
    }
    return acc.real();
}

}  // namespace dqc1

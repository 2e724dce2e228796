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

#include <cstddef>

namespace dqc1 {

/// Numerical tolerances shared by validation and invariant checks.
namespace tol {
inline constexpr double kNorm = 1e-9;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenvalue = 1e-9;
inline constexpr double kProbabilitySum = 1e-10;
}  // namespace tol

/// Size limits for the exponential-cost paths.
struct SimConfig {
    /// Largest total qubit count evolved as a dense density matrix.
    std::size_t density_cap = 12;
    /// Largest total qubit count for which exact distributions are computed at all.
    /// Above the density cap the engine averages 2^n_mixed pure-state runs.
    std::size_t exact_cap = 18;
    /// Largest context for dense gate_matrix / circuit_matrix realizations.
    std::size_t matrix_cap = 12;
    /// Largest pure-state register the kernels will allocate.
    std::size_t pure_cap = 26;
};

}  // namespace dqc1

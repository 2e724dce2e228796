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

#include "dqc1/engine.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "dqc1/errors.h"

namespace dqc1 {

namespace {

void check_exact_cap(const Dqc1Circuit &c, const SimConfig &config) {
    if (c.total_qubits() > config.exact_cap) {
        throw ResourceError("exact distribution: " + std::to_string(c.total_qubits()) + " qubits exceeds cap " +
                            std::to_string(config.exact_cap));
    }
}

OutcomeDistribution exact_by_density(const Dqc1Circuit &c, const SimConfig &config) {
    DensityMatrix rho = build_input(c, config);
    for (const Gate &g : c.circuit.gates) {
        rho.evolve(SparseOperator::embed(local_matrix(g), gate_qubits(g), c.total_qubits()));
    }
    return measure_probs(rho, c.measured);
}

OutcomeDistribution exact_by_mixture(const Dqc1Circuit &c, const SimConfig &config) {
    const MixtureInput input(c);
    const std::size_t m = c.total_qubits();
    std::vector<double> acc(std::size_t{1} << c.measured.size());
    PureState psi(m, config);
    for (std::uint64_t k = 0; k < input.num_members(); ++k) {
        psi.reset_to_basis(input.member(k));
        for (const Gate &g : c.circuit.gates) {
            psi.apply_unchecked(g);
        }
        const auto amps = psi.amplitudes();
        for (BasisIndex i = 0; i < amps.size(); ++i) {
            acc[gather_bits(i, c.measured, m)] += std::norm(amps[i]);
        }
    }
    for (auto &p : acc) {
        p *= input.weight();
    }
    return OutcomeDistribution(c.measured, std::move(acc));
}

// splitmix64 finalizer; shot streams are splitmix64 sequences keyed by
// (seed, shot index).
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class ShotStream {
   public:
    ShotStream(std::uint64_t seed, std::uint64_t shot) : state_(mix64(seed ^ mix64(shot + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

   private:
    std::uint64_t state_;
};

// Samples shots [begin, end). Caches the cumulative outcome distribution of
// each mixed-register basis state it has already simulated.
void sample_range(const Dqc1Circuit &c, const MixtureInput &input, std::uint64_t seed, std::size_t begin,
                  std::size_t end, std::vector<BasisIndex> &out, const SimConfig &config) {
    const std::size_t m = c.total_qubits();
    const std::size_t num_outcomes = std::size_t{1} << c.measured.size();
    const std::uint64_t member_mask = input.num_members() - 1;
    std::unordered_map<std::uint64_t, std::vector<double>> cache;
    PureState psi(m, config);
    for (std::size_t shot = begin; shot < end; ++shot) {
        ShotStream rng(seed, shot);
        const std::uint64_t k = input.mixed_qubits().empty() ? 0 : (rng.next() & member_mask);
        auto it = cache.find(k);
        if (it == cache.end()) {
            psi.reset_to_basis(input.member(k));
            for (const Gate &g : c.circuit.gates) {
                psi.apply_unchecked(g);
            }
            std::vector<double> cdf(num_outcomes);
            const auto amps = psi.amplitudes();
            for (BasisIndex i = 0; i < amps.size(); ++i) {
                cdf[gather_bits(i, c.measured, m)] += std::norm(amps[i]);
            }
            std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
            it = cache.emplace(k, std::move(cdf)).first;
        }
        const auto &cdf = it->second;
        const double u = rng.uniform() * cdf.back();
        auto pos = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (pos == cdf.end()) {
            --pos;
        }
        out[shot] = static_cast<BasisIndex>(pos - cdf.begin());
    }
}

}  // namespace

DensityMatrix build_input(const Dqc1Circuit &c, const SimConfig &config) {
    if (c.total_qubits() > config.density_cap) {
        throw ResourceError("density input: " + std::to_string(c.total_qubits()) + " qubits exceeds cap " +
                            std::to_string(config.density_cap));
    }
    const std::size_t m = c.total_qubits();
    const std::size_t dim = std::size_t{1} << m;
    BasisIndex clean_mask = 0;
    for (Qubit q : c.clean_qubits) {
        if (q >= m) {
            throw WiringError("clean qubit " + std::to_string(q) + " out of range");
        }
        clean_mask |= qubit_mask(q, m);
    }
    const double weight = MixtureInput(c).weight();
    Matrix rho(dim, dim);
    for (BasisIndex i = 0; i < dim; ++i) {
        if ((i & clean_mask) == 0) {
            rho(i, i) = weight;
        }
    }
    return DensityMatrix::from_matrix(std::move(rho));
}

MixtureInput::MixtureInput(const Dqc1Circuit &c) : total_qubits_(c.total_qubits()), mixed_(c.mixed_qubits()) {
    if (mixed_.size() >= 63) {
        throw ResourceError("mixed register too large");
    }
}

BasisIndex MixtureInput::member(std::uint64_t k) const {
    return scatter_bits(k, mixed_, total_qubits_);
}

OutcomeDistribution exact_distribution(const Dqc1Circuit &c, const SimConfig &config, ExactMethod method) {
    require_valid(c);
    switch (method) {
        case ExactMethod::Density:
            return exact_by_density(c, config);
        case ExactMethod::Mixture:
            check_exact_cap(c, config);
            return exact_by_mixture(c, config);
        case ExactMethod::Auto:
            break;
    }
    check_exact_cap(c, config);
    if (c.total_qubits() <= config.density_cap) {
        return exact_by_density(c, config);
    }
    return exact_by_mixture(c, config);
}

std::string ShotRecord::bitstring(std::size_t shot) const {
    const std::size_t k = measured.size();
    std::string s(k, '0');
    for (std::size_t j = 0; j < k; ++j) {
        if ((outcomes[shot] >> (k - 1 - j)) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

std::map<std::string, std::size_t> ShotRecord::counts() const {
    std::map<BasisIndex, std::size_t> by_index;
    for (BasisIndex o : outcomes) {
        ++by_index[o];
    }
    std::map<std::string, std::size_t> out;
    ShotRecord probe{measured, {}, seed};
    for (auto [o, n] : by_index) {
        probe.outcomes = {o};
        out[probe.bitstring(0)] = n;
    }
    return out;
}

ShotRecord sample(const Dqc1Circuit &c, std::size_t shots, std::uint64_t seed, const SimConfig &config) {
    if (shots == 0) {
        throw ContractError("sample: shots must be >= 1");
    }
    require_valid(c);
    if (c.total_qubits() > config.pure_cap) {
        throw ResourceError("sample: " + std::to_string(c.total_qubits()) + " qubits exceeds cap " +
                            std::to_string(config.pure_cap));
    }
    const MixtureInput input(c);
    ShotRecord record{c.measured, std::vector<BasisIndex>(shots), seed};

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, shots / 4096));
    if (workers <= 1) {
        sample_range(c, input, seed, 0, shots, record.outcomes, config);
        return record;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (shots + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(shots, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&, begin, end] { sample_range(c, input, seed, begin, end, record.outcomes, config); });
    }
    pool.clear();
    return record;
}

ConditionalDistribution condition(const OutcomeDistribution &joint, const PostselectionSpec &ps) {
    const auto &measured = joint.measured_qubits();
    const std::size_t k = measured.size();
    BasisIndex event_mask = 0, event_value = 0;
    std::vector<Qubit> kept_positions, kept_qubits;
    for (auto [q, bit] : ps.assignments) {
        auto it = std::find(measured.begin(), measured.end(), q);
        if (it == measured.end()) {
            throw ContractError("postselection on unmeasured qubit " + std::to_string(q));
        }
        const BasisIndex mask = BasisIndex{1} << (k - 1 - static_cast<std::size_t>(it - measured.begin()));
        event_mask |= mask;
        if (bit) {
            event_value |= mask;
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (!ps.assignments.contains(measured[j])) {
            kept_positions.push_back(j);
            kept_qubits.push_back(measured[j]);
        }
    }
    if (kept_qubits.empty()) {
        throw ContractError("postselection leaves no measured qubit to report");
    }
    std::vector<double> slice(std::size_t{1} << kept_qubits.size());
    double event = 0;
    for (BasisIndex i = 0; i < joint.probs().size(); ++i) {
        if ((i & event_mask) == event_value) {
            slice[gather_bits(i, kept_positions, k)] += joint[i];
            event += joint[i];
        }
    }
    if (!(event > 0.0)) {
        throw PostselectionImpossibleError("postselection event has probability zero");
    }
    for (auto &p : slice) {
        p /= event;
    }
    return {OutcomeDistribution(std::move(kept_qubits), std::move(slice)), event};
}

ConditionalDistribution conditional_distribution(const Dqc1Circuit &c, const PostselectionSpec &ps,
                                                 const SimConfig &config) {
    return condition(exact_distribution(c, config), ps);
}

double all_zeros_probability(const Dqc1Circuit &c, const SimConfig &config) {
    const std::set<Qubit> measured(c.measured.begin(), c.measured.end());
    const std::set<Qubit> clean(c.clean_qubits.begin(), c.clean_qubits.end());
    if (measured != clean) {
        throw ContractError("all_zeros_probability: measured set must equal the clean set");
    }
    return exact_distribution(c, config)[0];
}

}  // namespace dqc1

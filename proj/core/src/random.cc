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

#include "dqc1/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dqc1 {

namespace {

std::vector<Qubit> distinct_qubits(std::size_t total, std::size_t count, std::mt19937_64 &rng) {
    std::vector<Qubit> all(total);
    std::iota(all.begin(), all.end(), Qubit{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

}  // namespace

Matrix random_unitary_2x2(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Complex a0{normal(rng), normal(rng)}, a1{normal(rng), normal(rng)};
    Complex b0{normal(rng), normal(rng)}, b1{normal(rng), normal(rng)};
    const double na = std::sqrt(std::norm(a0) + std::norm(a1));
    a0 /= na;
    a1 /= na;
    const Complex proj = std::conj(a0) * b0 + std::conj(a1) * b1;
    b0 -= proj * a0;
    b1 -= proj * a1;
    const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
    b0 /= nb;
    b1 /= nb;
    return {{a0, b0}, {a1, b1}};
}

Circuit random_circuit(std::size_t total_qubits, std::size_t num_gates, std::mt19937_64 &rng,
                       const RandomCircuitOptions &options) {
    Circuit c{total_qubits, {}};
    std::uniform_int_distribution<int> pick_kind(0, 13);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::bernoulli_distribution coin(0.5);
    while (c.gates.size() < num_gates) {
        const int kind = pick_kind(rng);
        const Qubit q = std::uniform_int_distribution<Qubit>(0, total_qubits - 1)(rng);
        switch (kind) {
            case 0:
                c.add(gates::h(q));
                break;
            case 1:
                c.add(gates::x(q));
                break;
            case 2:
                c.add(gates::y(q));
                break;
            case 3:
                c.add(gates::z(q));
                break;
            case 4:
                c.add(coin(rng) ? gates::s(q) : gates::sdg(q));
                break;
            case 5:
                c.add(coin(rng) ? gates::t(q) : gates::tdg(q));
                break;
            case 6:
                c.add(gates::rz(q, angle(rng)));
                break;
            case 7:
                if (options.allow_matrices) {
                    c.add(gates::u1q(q, random_unitary_2x2(rng)));
                }
                break;
            case 8:
            case 9:
                if (total_qubits >= 2) {
                    auto w = distinct_qubits(total_qubits, 2, rng);
                    c.add(kind == 8 ? gates::cz(w[0], w[1]) : gates::cnot(w[0], w[1]));
                }
                break;
            case 10:
                if (options.allow_matrices && total_qubits >= 2) {
                    const std::size_t nc = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, total_qubits - 1))(rng);
                    auto w = distinct_qubits(total_qubits, nc + 1, rng);
                    const Qubit t = w.back();
                    w.pop_back();
                    c.add(gates::cu(w, {t}, random_unitary_2x2(rng)));
                }
                break;
            case 11:
            case 12:
                if (options.allow_mcx && total_qubits >= 2) {
                    const std::size_t nc = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(3, total_qubits - 1))(rng);
                    auto w = distinct_qubits(total_qubits, nc + 1, rng);
                    const Qubit t = w.back();
                    w.pop_back();
                    std::vector<std::uint8_t> pol(nc);
                    for (auto &p : pol) {
                        p = coin(rng);
                    }
                    c.add(gates::mcx(w, pol, t));
                }
                break;
            case 13:
                if (options.allow_graph_proj && total_qubits >= 2) {
                    const bool extra = total_qubits >= 3 && coin(rng);
                    const std::size_t max_reg = std::min<std::size_t>(3, total_qubits - 1 - (extra ? 1 : 0));
                    const std::size_t nr = std::uniform_int_distribution<std::size_t>(1, max_reg)(rng);
                    auto w = distinct_qubits(total_qubits, nr + 1 + (extra ? 1 : 0), rng);
                    const Qubit t = w[0];
                    std::optional<Qubit> ez;
                    if (extra) {
                        ez = w[1];
                    }
                    std::vector<Qubit> reg(w.begin() + 1 + (extra ? 1 : 0), w.end());
                    c.add(gates::graph_proj_x(random_graph(nr, 0.6, rng), reg, t, ez));
                }
                break;
            default:
                break;
        }
    }
    return c;
}

GraphSpec random_graph(std::size_t num_vertices, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution edge(p);
    GraphSpec g{num_vertices, {}};
    for (std::size_t a = 0; a < num_vertices; ++a) {
        for (std::size_t b = a + 1; b < num_vertices; ++b) {
            if (edge(rng)) {
                g.edges.emplace_back(a, b);
            }
        }
    }
    return g;
}

OutcomeDistribution random_distribution(std::vector<Qubit> measured, std::mt19937_64 &rng, double zero_fraction) {
    const std::size_t dim = std::size_t{1} << measured.size();
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::bernoulli_distribution zero(zero_fraction);
    std::vector<double> probs(dim);
    for (auto &p : probs) {
        p = zero(rng) ? 0.0 : weight(rng);
    }
    if (std::all_of(probs.begin(), probs.end(), [](double p) { return p == 0.0; })) {
        probs[std::uniform_int_distribution<std::size_t>(0, dim - 1)(rng)] = 1.0;
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (auto &p : probs) {
        p /= total;
    }
    return OutcomeDistribution(std::move(measured), std::move(probs));
}

}  // namespace dqc1

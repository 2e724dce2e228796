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

#include "dqc1/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "dqc1/analysis.h"
#include "dqc1/engine.h"
#include "dqc1/errors.h"
#include "dqc1/gadgets.h"
#include "dqc1/random.h"
#include "dqc1/state.h"

namespace dqc1 {

namespace {

PropertyResult make_result(std::string name, double residual, double threshold, std::string detail = {}) {
    return {std::move(name), residual <= threshold, residual, threshold, std::move(detail)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

PureState random_state(std::size_t m, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(std::size_t{1} << m);
    double norm = 0;
    for (auto &a : amps) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return PureState::from_amplitudes(std::move(amps));
}

void mutate_w(std::vector<Gate> &w, const VerifyOptions &options) {
    if (options.mutation != Mutation::FlipWPolarity) {
        return;
    }
    for (Gate &g : w) {
        if (g.kind == GateKind::MCX && !g.polarity.empty()) {
            g.polarity.front() ^= 1;
            return;
        }
    }
}

// Applies the configured mutation to a compiled reduction in place.
void mutate_reduction(CompiledReduction &r, const VerifyOptions &options) {
    if (options.mutation == Mutation::FlipPostselectBit) {
        auto &ps = r.postselect.assignments;
        auto it = ps.rbegin();
        it->second ^= 1;
        r.circuit.postselect = r.postselect;
    } else if (options.mutation == Mutation::FlipWPolarity) {
        for (Gate &g : r.circuit.circuit.gates) {
            // A flipped output-vertex control only adds a Z byproduct on the
            // output, invisible to a computational-basis readout.
            if (g.kind == GateKind::MCX && !g.polarity.empty() && g.polarity.front() == 0) {
                g.polarity.front() = 1;
                return;
            }
        }
    }
}

Dqc1Circuit w_circuit(const GraphSpec &graph, const VerifyOptions &options) {
    const std::size_t n = graph.num_vertices;
    std::vector<Qubit> reg(n);
    for (std::size_t v = 0; v < n; ++v) {
        reg[v] = v + 1;
    }
    auto gates_w = build_W(graph, 0, reg);
    mutate_w(gates_w, options);
    Dqc1Circuit c;
    c.circuit.total_qubits = n + 1;
    c.circuit.append(gates_w);
    c.clean_qubits = {0};
    c.measured = {0};
    return c;
}

// Density matrix of the register after postselecting qubit 0 on |1>, and the
// branch probability.
std::pair<DensityMatrix, double> clean_one_branch(const Dqc1Circuit &c) {
    DensityMatrix rho = build_input(c);
    for (const Gate &g : c.circuit.gates) {
        rho.evolve(g);
    }
    const std::size_t half = rho.dimension() / 2;
    Matrix block(half, half);
    double prob = 0;
    for (std::size_t r = 0; r < half; ++r) {
        for (std::size_t col = 0; col < half; ++col) {
            block(r, col) = rho(half + r, half + col);
        }
        prob += block(r, r).real();
    }
    if (prob > 0) {
        block = Complex{1.0 / prob} * block;
    }
    return {DensityMatrix::from_matrix(std::move(block)), prob};
}

std::vector<double> random_angles(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> out(static_cast<std::size_t>(len(rng)));
    for (auto &a : out) {
        a = angle(rng);
    }
    return out;
}

OutcomeDistribution target_distribution(std::span<const double> angles, Qubit output) {
    const Qubit q0[] = {0};
    const auto d = measure_probs(rotation_target(angles), q0);
    return OutcomeDistribution({output}, {d.probs().begin(), d.probs().end()});
}

// ---------------------------------------------------------------- qstate

SuiteReport qstate_suite(const VerifyOptions &options) {
    SuiteReport rep{"qstate", {}};
    std::mt19937_64 rng(options.seed);

    {
        double worst = 0;
        for (int i = 0; i < 200; ++i) {
            const Circuit c = random_circuit(5, 1, rng);
            worst = std::max(worst, gate_matrix(c.gates[0], 5).unitarity_residual());
        }
        rep.properties.push_back(make_result("gate matrices are unitary", worst, tol::kUnitarity));
    }
    {
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            const std::size_t m = 1 + i % 6;
            const Circuit c = random_circuit(m, 1, rng);
            const PureState psi = random_state(m, rng);
            const PureState back = apply_gate(apply_gate(psi, c.gates[0]), inverse(c.gates[0]));
            for (std::size_t k = 0; k < psi.dimension(); ++k) {
                worst = std::max(worst, std::abs(back.amplitude(k) - psi.amplitude(k)));
            }
        }
        rep.properties.push_back(make_result("gate followed by inverse is identity", worst, 1e-10));
    }
    {
        double worst = 0;
        for (int i = 0; i < 60; ++i) {
            const std::size_t m = 1 + i % 6;
            const Circuit c = random_circuit(m, 1, rng);
            const PureState psi = random_state(m, rng);
            const DensityMatrix evolved = evolve_density(DensityMatrix::from_pure(psi), c.gates[0]);
            const DensityMatrix expected = DensityMatrix::from_pure(apply_gate(psi, c.gates[0]));
            worst = std::max(worst, evolved.matrix().max_abs_diff(expected.matrix()));
        }
        rep.properties.push_back(make_result("density evolution matches pure evolution", worst, 1e-10));
    }
    {
        double worst = 0;
        for (std::size_t m = 1; m <= 6; ++m) {
            Dqc1Circuit all_mixed;
            all_mixed.circuit.total_qubits = m + 1;
            all_mixed.clean_qubits = {0};
            const Circuit scramble = random_circuit(m + 1, 8, rng);
            std::vector<Qubit> measured;
            for (Qubit q = 0; q <= m; ++q) {
                measured.push_back(q);
            }
            DensityMatrix rho = build_input(all_mixed);
            std::vector<double> avg(std::size_t{1} << (m + 1));
            const MixtureInput mix(all_mixed);
            for (std::uint64_t k = 0; k < mix.num_members(); ++k) {
                PureState psi = PureState::basis(m + 1, mix.member(k));
                for (const Gate &g : scramble.gates) {
                    psi.apply(g);
                }
                const auto d = measure_probs(psi, measured);
                for (std::size_t o = 0; o < avg.size(); ++o) {
                    avg[o] += d[o] * mix.weight();
                }
            }
            for (const Gate &g : scramble.gates) {
                rho.evolve(g);
            }
            const auto direct = measure_probs(rho, measured);
            for (std::size_t o = 0; o < avg.size(); ++o) {
                worst = std::max(worst, std::abs(direct[o] - avg[o]));
            }
        }
        rep.properties.push_back(make_result("mixed-state measurement equals ensemble average", worst, 1e-10));
    }
    {
        double worst = 0;
        std::uniform_int_distribution<std::size_t> size(2, 8);
        for (int i = 0; i < 50; ++i) {
            const std::size_t m = size(rng);
            Dqc1Circuit c;
            c.circuit = random_circuit(m, 4 * m, rng);
            c.clean_qubits = {0};
            std::vector<Qubit> all(m);
            for (Qubit q = 0; q < m; ++q) {
                all[q] = q;
            }
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(m, 4))(rng));
            c.measured = all;
            const auto a = exact_distribution(c, {}, ExactMethod::Density);
            const auto b = exact_distribution(c, {}, ExactMethod::Mixture);
            worst = std::max(worst, total_variation(a, b));
        }
        rep.properties.push_back(make_result("density and mixture exact paths agree (TV)", worst, 1e-10));
    }
    return rep;
}

// ---------------------------------------------------------------- gadgets

SuiteReport gadgets_suite(const VerifyOptions &options) {
    SuiteReport rep{"gadgets", {}};
    std::mt19937_64 rng(options.seed + 1);

    {
        double worst = 0;
        int graphs = 0;
        auto check = [&](const GraphSpec &g) {
            const std::size_t n = g.num_vertices;
            const Dqc1Circuit c = w_circuit(g, options);
            const Matrix got = circuit_matrix(c.circuit);
            const PureState cluster = cluster_state(g);
            const Matrix p = outer(cluster.amplitudes(), cluster.amplitudes());
            const Matrix x{{0, 1}, {1, 0}};
            const Matrix want = kron(x, p) + kron(Matrix::identity(2), Matrix::identity(std::size_t{1} << n) - p);
            worst = std::max(worst, got.max_abs_diff(want));
            ++graphs;
        };
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<std::pair<std::size_t, std::size_t>> all;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    all.emplace_back(a, b);
                }
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
                GraphSpec g{n, {}};
                for (std::size_t e = 0; e < all.size(); ++e) {
                    if ((mask >> e) & 1) {
                        g.edges.push_back(all[e]);
                    }
                }
                check(g);
            }
        }
        for (int i = 0; i < 8; ++i) {
            check(random_graph(4, 0.5, rng));
        }
        rep.properties.push_back(make_result("W realizes X(x)P_G + I(x)(I-P_G) (" + std::to_string(graphs) + " graphs)",
                                             worst, 1e-10));
    }
    {
        double worst_prob = 0, worst_fid = 0;
        for (std::size_t n = 2; n <= 8; ++n) {
            const GraphSpec g = GraphSpec::linear(n);
            const auto [reg, prob] = clean_one_branch(w_circuit(g, options));
            worst_prob = std::max(worst_prob, std::abs(prob - std::ldexp(1.0, -static_cast<int>(n))));
            worst_fid = std::max(worst_fid, 1.0 - fidelity(cluster_state(g), reg));
        }
        rep.properties.push_back(make_result("clean=1 branch probability after W is 2^-n (n=2..8)", worst_prob, 1e-10));
        rep.properties.push_back(
            make_result("postselected register is the cluster state (1 - fidelity)", worst_fid, 1e-10));
    }
    {
        double worst = 0;
        for (int i = 0; i < 30; ++i) {
            const std::size_t n = 1 + i % 4;
            const GraphSpec g = random_graph(n, 0.5, rng);
            std::vector<Qubit> reg(n);
            for (std::size_t v = 0; v < n; ++v) {
                reg[v] = v + 2;
            }
            const bool with_ancilla = i % 2 == 1;
            const std::size_t m = n + 2;
            std::vector<Gate> decomposed = with_ancilla ? build_W_prime(g, 0, 1, reg) : build_W(g, 0, reg);
            mutate_w(decomposed, options);
            const Gate direct =
                gates::graph_proj_x(g, reg, 0, with_ancilla ? std::optional<Qubit>(1) : std::nullopt);
            PureState a = random_state(m, rng);
            PureState b = a;
            for (const Gate &gate : decomposed) {
                a.apply(gate);
            }
            b.apply(direct);
            for (std::size_t k = 0; k < a.dimension(); ++k) {
                worst = std::max(worst, std::abs(a.amplitude(k) - b.amplitude(k)));
            }
        }
        rep.properties.push_back(make_result("decomposed and direct projector gates agree", worst, 1e-10));
    }
    {
        double worst_prob = 0, worst_fid = 0;
        for (std::size_t n = 1; n <= 6; ++n) {
            const GraphSpec g = GraphSpec::linear(n);
            std::vector<Qubit> reg(n);
            for (std::size_t v = 0; v < n; ++v) {
                reg[v] = v + 2;
            }
            auto wp = build_W_prime(g, 0, 1, reg);
            mutate_w(wp, options);
            Dqc1Circuit c;
            c.circuit.total_qubits = n + 2;
            c.circuit.append(wp);
            c.measured = {0};
            const auto [post, prob] = clean_one_branch(c);
            std::vector<Complex> want(std::size_t{1} << (n + 1));
            const auto cluster = cluster_state(g);
            std::copy(cluster.amplitudes().begin(), cluster.amplitudes().end(), want.begin());
            worst_prob = std::max(worst_prob, std::abs(prob - std::ldexp(1.0, -static_cast<int>(n + 1))));
            worst_fid = std::max(worst_fid, 1.0 - fidelity(PureState::from_amplitudes(want), post));
        }
        rep.properties.push_back(make_result("W' clean=1 branch probability is 2^-(n+1)", worst_prob, 1e-10));
        rep.properties.push_back(make_result("W' postselected state is |0>|G> (1 - fidelity)", worst_fid, 1e-10));
    }
    return rep;
}

// ------------------------------------------------------------- reductions

SuiteReport reductions_suite(const VerifyOptions &options) {
    SuiteReport rep{"reductions", {}};
    std::mt19937_64 rng(options.seed + 2);
    double worst_n1 = 0, worst_three = 0, worst_cross = 0, min_event = 1;
    bool shape_ok = true;
    std::string failure;
    for (int i = 0; i < 50; ++i) {
        const auto angles = random_angles(rng);
        const auto pattern = pattern_from_rotations(angles);
        auto n1 = compile_n_plus_1(pattern);
        auto three = compile_three(pattern);
        mutate_reduction(n1, options);
        mutate_reduction(three, options);
        shape_ok &= three.circuit.measured.size() == 3 && three.postselect.assignments.size() == 2;
        try {
            const auto c1 = conditional_distribution(n1.circuit, n1.postselect);
            const auto c3 = conditional_distribution(three.circuit, three.postselect);
            const auto o1 = marginal(c1.distribution, n1.output_qubits);
            const auto o3 = marginal(c3.distribution, three.output_qubits);
            worst_n1 = std::max(worst_n1, total_variation(o1, target_distribution(angles, n1.output_qubits[0])));
            worst_three =
                std::max(worst_three, total_variation(o3, target_distribution(angles, three.output_qubits[0])));
            worst_cross = std::max(worst_cross, std::abs(o1[0] - o3[0]));
            min_event = std::min({min_event, c1.event_probability, c3.event_probability});
        } catch (const PostselectionImpossibleError &) {
            worst_n1 = worst_three = INFINITY;
            min_event = 0;
            failure = "postselection impossible on pattern " + std::to_string(i);
        }
    }
    rep.properties.push_back(make_result("n+1 reduction matches rotation target (TV, 50 patterns)", worst_n1, 1e-9,
                                         failure));
    rep.properties.push_back(
        make_result("three-measurement reduction matches rotation target (TV)", worst_three, 1e-9, failure));
    rep.properties.push_back(make_result("both reductions agree", worst_cross, 1e-10));
    rep.properties.push_back(make_result("three-measurement shape: 3 measured, 2 postselected", shape_ok ? 0.0 : 1.0, 0));
    PropertyResult positive{"postselection events have positive probability", min_event > 0, min_event, 0,
                            "min event probability " + fmt(min_event)};
    rep.properties.push_back(positive);
    return rep;
}

// ---------------------------------------------------------------- analysis

SuiteReport analysis_suite(const VerifyOptions &options) {
    SuiteReport rep{"analysis", {}};
    std::mt19937_64 rng(options.seed + 3);
    {
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = 1 + i % 6;
            const Circuit u = random_circuit(n, 3 * n, rng);
            const Complex tr = circuit_matrix(u).trace();
            const double scale = std::ldexp(1.0, static_cast<int>(n + 1));
            const auto re = exact_distribution(build_trace_circuit(u, TracePart::Real), {}, ExactMethod::Mixture);
            const auto im = exact_distribution(build_trace_circuit(u, TracePart::Imaginary), {}, ExactMethod::Mixture);
            worst = std::max({worst, std::abs(re[0] - (0.5 + tr.real() / scale)),
                              std::abs(im[0] - (0.5 + tr.imag() / scale))});
        }
        rep.properties.push_back(make_result("trace circuit Pr(0) = 1/2 + tr(U)/2^(n+1)", worst, 1e-9));
    }
    {
        double worst = 0;
        const auto p = OutcomeDistribution({0}, {0.5, 0.5});
        const auto q = OutcomeDistribution({0}, {0.6, 0.4});
        worst = std::max(worst, std::abs(minimal_multiplicative_error(p, q).worst_c - 1.25));
        worst = std::max(worst, std::abs(minimal_multiplicative_error(p, p).worst_c - 1.0));
        int violations = 0;
        for (int i = 0; i < 1000; ++i) {
            const std::size_t k = 2 + i % 3;
            std::vector<Qubit> measured(k);
            for (std::size_t j = 0; j < k; ++j) {
                measured[j] = j;
            }
            const auto a = random_distribution(measured, rng);
            const auto b = random_distribution(measured, rng);
            const auto rep_c = minimal_multiplicative_error(a, b);
            PostselectionSpec ps;
            ps.assignments[0] = std::uniform_int_distribution<int>(0, 1)(rng);
            if (!check_conditional_bounds(a, b, ps, rep_c.worst_c).passed) {
                ++violations;
            }
            for (const auto &[subset, c] : rep_c.per_marginal_c) {
                if (c > rep_c.worst_c) {
                    ++violations;
                }
            }
        }
        rep.properties.push_back(make_result("multiplicative-error calculus (c=1.25 pair, c(p,p)=1)", worst, 1e-15));
        rep.properties.push_back(make_result("c^2 conditional bounds hold on 1000 random pairs", violations, 0,
                                             std::to_string(violations) + " violations"));
    }
    {
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            const std::size_t k = 1 + i % 2;
            const std::size_t n = 1 + (i / 2) % 6;
            Dqc1Circuit c;
            c.circuit = random_circuit(k + n, 3 * (k + n), rng);
            c.clean_qubits.clear();
            for (Qubit q = 0; q < k; ++q) {
                c.clean_qubits.push_back(q);
            }
            c.measured = c.clean_qubits;
            const double direct = all_zeros_probability(c);
            const double mixture = exact_distribution(c, {}, ExactMethod::Mixture)[0];
            const double block = frobenius_block_norm(c.circuit, k);
            worst = std::max({worst, std::abs(direct - block), std::abs(mixture - block)});
        }
        rep.properties.push_back(make_result("all-zeros probability equals 2^-n ||A||_F^2", worst, 1e-9));
    }
    {
        double worst_sigma = 0;
        for (int i = 0; i < 5; ++i) {
            const std::size_t m = 2 + i;
            Dqc1Circuit c;
            c.circuit = random_circuit(m, 3 * m, rng);
            c.measured = {0, m - 1};
            const std::size_t shots = 100000;
            const auto exact = exact_distribution(c);
            const auto counts = sample(c, shots, options.seed + i).counts();
            for (BasisIndex o = 0; o < exact.probs().size(); ++o) {
                const double p = exact[o];
                const auto it = counts.find(exact.bitstring(o));
                const double f = it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
                const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
                worst_sigma = std::max(worst_sigma, std::abs(f - p) / sigma);
            }
        }
        rep.properties.push_back(make_result("sampled frequencies within 5 sigma of exact", worst_sigma, 5.0));
    }
    return rep;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult &p) { return p.passed; });
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"qstate", "gadgets", "reductions", "analysis", "all"};
    return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions &options) {
    static const std::vector<std::pair<std::string_view, std::function<SuiteReport(const VerifyOptions &)>>> suites{
        {"qstate", qstate_suite},
        {"gadgets", gadgets_suite},
        {"reductions", reductions_suite},
        {"analysis", analysis_suite},
    };
    std::vector<SuiteReport> out;
    for (const auto &[suite, fn] : suites) {
        if (name == "all" || name == suite) {
            out.push_back(fn(options));
        }
    }
    if (out.empty()) {
        throw ContractError("unknown verify suite '" + std::string(name) + "'");
    }
    return out;
}

Mutation mutation_from_name(std::string_view name) {
    if (name == "none") {
        return Mutation::None;
    }
    if (name == "flip-w-polarity") {
        return Mutation::FlipWPolarity;
    }
    if (name == "flip-postselect-bit") {
        return Mutation::FlipPostselectBit;
    }
    throw ContractError("unknown mutation '" + std::string(name) + "'");
}

}  // namespace dqc1

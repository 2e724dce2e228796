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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass. Reference values come from the brute-force oracle in
// dense_oracle.h or from hand-rolled arithmetic below, never from the
// library routine under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "dense_oracle.h"
#include "dqc1/analysis.h"
#include "dqc1/engine.h"
#include "dqc1/gadgets.h"
#include "dqc1/random.h"
#include "dqc1/verify.h"

using namespace dqc1;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Qubit> wires(Qubit lo, Qubit hi) {
    std::vector<Qubit> out;
    for (Qubit q = lo; q < hi; q++) {
        out.push_back(q);
    }
    return out;
}

/// Pr(output = 0) of prod_j H diag(1, e^{i theta_j}) |+>, by 2x2 arithmetic.
double rotation_target_p0(const std::vector<double> &angles) {
    const double r = 1 / std::sqrt(2.0);
    oracle::C a = r, b = r;
    for (double theta : angles) {
        const oracle::C pb = b * std::exp(oracle::C{0, theta});
        const oracle::C na = r * (a + pb), nb = r * (a - pb);
        a = na;
        b = nb;
    }
    return std::norm(a);
}

// 1. Trace-circuit identity.
Outcome trace_identity() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    double worst = 0;
    for (int trial = 0; trial < 100; trial++) {
        const std::size_t n = 1 + trial % 6;
        const Circuit u = random_circuit(n, 4 * n + 4, rng);
        const auto tr = oracle::trace(oracle::circuit_operator(u.gates, n));
        const double scale = std::ldexp(1.0, -static_cast<int>(n) - 1);
        const double re = exact_distribution(build_trace_circuit(u, TracePart::Real)).probability("0");
        const double im = exact_distribution(build_trace_circuit(u, TracePart::Imaginary)).probability("0");
        worst = std::max({worst, std::abs(re - (0.5 + tr.real() * scale)), std::abs(im - (0.5 + tr.imag() * scale))});
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 60,
            fmt("100 unitaries, n in 1..6, real+imaginary; worst |dPr(0)| = %.2e (tol 1e-9); %.2f s (limit 60 s)", worst,
                secs)};
}

// 2. W-gadget branch on linear clusters.
Outcome w_branch() {
    const auto t0 = Clock::now();
    double worst_prob = 0, worst_infidelity = 0, worst_formula = 0;
    for (std::size_t n = 2; n <= 8; n++) {
        const auto graph = GraphSpec::linear(n);
        Dqc1Circuit c;
        c.circuit = {n + 1, build_W(graph, 0, wires(1, n + 1))};
        c.measured = {0};
        DensityMatrix rho = build_input(c);
        for (const Gate &g : c.circuit.gates) {
            rho.evolve(g);
        }
        const std::size_t block = std::size_t{1} << n;
        const auto psi = oracle::graph_state(graph);  // CZ applied literally to |+>^n
        const double w = 1.0 / static_cast<double>(block);

        double prob = 0;
        oracle::C overlap = 0;
        for (std::size_t r = 0; r < block; r++) {
            prob += rho(block + r, block + r).real();
            for (std::size_t s = 0; s < block; s++) {
                overlap += std::conj(psi[r]) * rho(block + r, block + s) * psi[s];
                // Whole state: 2^-n |1><1| (x) |G><G| + 2^-n |0><0| (x) (I - |G><G|).
                const oracle::C g = psi[r] * std::conj(psi[s]);
                const oracle::C id = r == s ? 1.0 : 0.0;
                worst_formula = std::max({worst_formula, std::abs(rho(block + r, block + s) - w * g),
                                          std::abs(rho(r, s) - w * (id - g)), std::abs(rho(r, block + s)),
                                          std::abs(rho(block + r, s))});
            }
        }
        worst_prob = std::max(worst_prob, std::abs(prob - w));
        worst_infidelity = std::max(worst_infidelity, 1 - overlap.real() / prob);
    }
    const double secs = seconds_since(t0);
    return {worst_prob <= 1e-10 && worst_infidelity <= 1e-10 && worst_formula <= 1e-10 && secs < 30,
            fmt("n = 2..8; worst |P(clean=1) - 2^-n| = %.2e (tol 1e-10); worst 1 - F = %.2e (tol 1e-10); "
                "worst entry deviation from post-W formula = %.2e; %.2f s (limit 30 s)",
                worst_prob, worst_infidelity, worst_formula, secs)};
}

std::vector<std::vector<double>> rotation_lists() {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<std::vector<double>> out;
    for (int trial = 0; trial < 50; trial++) {
        std::vector<double> angles(trial % 5);  // lengths 0..4
        for (auto &a : angles) {
            a = angle(rng);
        }
        out.push_back(angles);
    }
    return out;
}

// 3. n+1-measurement reduction.
Outcome reduction_n_plus_1() {
    double worst = 0;
    std::size_t max_qubits = 0;
    for (const auto &angles : rotation_lists()) {
        const auto r = compile_n_plus_1(pattern_from_rotations(angles));
        max_qubits = std::max(max_qubits, r.circuit.total_qubits());
        const auto cond = conditional_distribution(r.circuit, r.postselect).distribution;
        const double p0 = rotation_target_p0(angles);
        worst = std::max(worst, std::abs(cond.probability("0") - p0));  // TV of two one-bit laws
    }
    return {worst <= 1e-9 && max_qubits <= 9,
            fmt("50 rotation lists (length 0..4, <= %zu qubits); worst TV = %.2e (tol 1e-9)", max_qubits, worst)};
}

// 4. Three-measurement reduction.
Outcome reduction_three() {
    double worst = 0;
    bool shape_ok = true;
    for (const auto &angles : rotation_lists()) {
        const auto r = compile_three(pattern_from_rotations(angles));
        shape_ok = shape_ok && r.circuit.measured.size() == 3 && r.postselect.assignments.size() == 2;
        const auto cond = conditional_distribution(r.circuit, r.postselect).distribution;
        shape_ok = shape_ok && cond.num_bits() == 1;
        worst = std::max(worst, std::abs(cond.probability("0") - rotation_target_p0(angles)));
    }
    return {worst <= 1e-9 && shape_ok,
            fmt("50 rotation lists; 3 measured / 2 postselected: %s; worst TV = %.2e (tol 1e-9)",
                shape_ok ? "yes" : "NO", worst)};
}

// 5. Density vs mixture paths, and sampling bands.
Outcome oracle_agreement() {
    std::mt19937_64 rng(505);
    double worst_tv = 0;
    std::size_t band_violations = 0, band_checks = 0;
    for (int trial = 0; trial < 50; trial++) {
        const std::size_t m = 1 + trial % 8;
        Dqc1Circuit c;
        c.circuit = random_circuit(m, 3 * m + 6, rng);
        c.measured = {0};
        for (Qubit q = m - 1; q >= 1 && c.measured.size() < 3; q--) {
            c.measured.push_back(q);
        }
        const auto dens = exact_distribution(c, {}, ExactMethod::Density);
        const auto mix = exact_distribution(c, {}, ExactMethod::Mixture);
        worst_tv = std::max(worst_tv, total_variation(dens, mix));

        const std::size_t shots = 100000;
        auto counts = sample(c, shots, 9000 + trial).counts();
        for (BasisIndex k = 0; k < dens.probs().size(); k++) {
            const double p = dens.probs()[k];
            const double f = static_cast<double>(counts[dens.bitstring(k)]) / shots;
            const double sigma = std::sqrt(p * (1 - p) / shots);
            band_checks++;
            if (std::abs(f - p) > 5 * sigma + 1e-12) {
                band_violations++;
            }
        }
    }
    return {worst_tv <= 1e-10 && band_violations == 0,
            fmt("50 circuits <= 8 qubits; worst density/mixture TV = %.2e (tol 1e-10); "
                "10^5-shot 5-sigma band violations = %zu of %zu",
                worst_tv, band_violations, band_checks)};
}

// 6. Multiplicative-error calculus and conditional bounds.
Outcome multiplicative_calculus() {
    const OutcomeDistribution half({0}, {0.5, 0.5});
    const OutcomeDistribution skew({0}, {0.6, 0.4});
    const double c_same = minimal_multiplicative_error(half, half).worst_c;
    const double c_pair = minimal_multiplicative_error(half, skew).worst_c;

    std::mt19937_64 rng(606);
    std::size_t holds = 0, agree = 0, tight_c1 = 0;
    for (int trial = 0; trial < 1000; trial++) {
        const std::vector<Qubit> measured{0, 1, 2};
        const auto p = random_distribution(measured, rng);
        const bool identical = trial % 10 == 0;  // q = p: the bound is tight at c = 1
        const auto q = identical ? p : random_distribution(measured, rng);
        const Qubit ps_qubit = static_cast<Qubit>(trial % 3);
        const std::uint8_t ps_bit = static_cast<std::uint8_t>(trial / 3 % 2);

        // Hand-computed joint c and conditional ratios.
        double c = 1;
        for (std::size_t x = 0; x < 8; x++) {
            c = std::max({c, p.probs()[x] / q.probs()[x], q.probs()[x] / p.probs()[x]});
        }
        double pe = 0, qe = 0;
        for (std::size_t x = 0; x < 8; x++) {
            if ((x >> (2 - ps_qubit) & 1) == ps_bit) {
                pe += p.probs()[x];
                qe += q.probs()[x];
            }
        }
        bool within = true;
        for (std::size_t x = 0; x < 8; x++) {
            if ((x >> (2 - ps_qubit) & 1) == ps_bit) {
                const double ratio = (q.probs()[x] / qe) / (p.probs()[x] / pe);
                within = within && ratio <= c * c * (1 + 1e-12) && ratio >= (1 - 1e-12) / (c * c);
            }
        }
        const double c_lib = minimal_multiplicative_error(p, q).worst_c;
        const auto report = check_conditional_bounds(p, q, PostselectionSpec{{{ps_qubit, ps_bit}}}, c_lib);
        holds += within && report.passed;
        agree += std::abs(c_lib - c) <= 1e-12 * c && report.passed == within;
        if (identical && report.tight) {
            tight_c1++;
        }
    }

    // Near-equality family at c = 1.25: P = (a, b, ...), Q = (c a, b / c, ...),
    // conditioned on the first bit being 0; the ratio on outcome 0 tends to c^2
    // as a / b -> 0.
    const double cc = 1.25;
    const double a = 1e-14, b = 0.4;
    const OutcomeDistribution fp({0, 1}, {a, b, 0.3, 0.3 - a});
    const double qa = cc * a, qb = b / cc;
    const double rest = (1 - qa - qb) / 2;
    const OutcomeDistribution fq({0, 1}, {qa, qb, rest, rest});
    const auto near = check_conditional_bounds(fp, fq, PostselectionSpec{{{0, 0}}}, cc);
    const double near_gap = std::abs(near.binding_ratio - cc * cc) / (cc * cc);

    const bool ok = c_same == 1.0 && std::abs(c_pair - 1.25) <= 1e-15 && holds == 1000 && agree == 1000 &&
                    tight_c1 == 100 && near.passed && near.tight;
    return {ok, fmt("c(p,p) = %.17g; c(0.5/0.5, 0.6/0.4) = %.17g; c^2 bounds hold on %zu/1000 pairs "
                    "(library agrees with hand check on %zu); tight at c = 1 detected on %zu/100 q = p pairs; "
                    "near-equality family at c = 1.25 flagged tight: %s (ratio gap %.1e)",
                    c_same, c_pair, holds, agree, tight_c1, near.tight ? "yes" : "no", near_gap)};
}

// 7. All-zeros probability equals the normalized block Frobenius norm.
Outcome shor_jordan() {
    std::mt19937_64 rng(707);
    double worst = 0;
    for (int trial = 0; trial < 50; trial++) {
        const std::size_t k = 1 + trial % 2;
        const std::size_t n = 1 + trial / 2 % 6;
        Dqc1Circuit c;
        c.circuit = random_circuit(k + n, 3 * (k + n) + 4, rng);
        c.clean_qubits = wires(0, k);
        c.measured = c.clean_qubits;
        const auto u = oracle::circuit_operator(c.circuit.gates, k + n);
        const std::size_t block = std::size_t{1} << n;
        double fro = 0;
        for (std::size_t r = 0; r < block; r++) {
            for (std::size_t s = 0; s < block; s++) {
                fro += std::norm(u(r, s));
            }
        }
        worst = std::max(worst, std::abs(all_zeros_probability(c) - fro / static_cast<double>(block)));
    }
    return {worst <= 1e-9, fmt("50 circuits, k in {1,2}, n in 1..6; worst deviation = %.2e (tol 1e-9)", worst)};
}

// 8. Mutation sensitivity of the verify suites.
Outcome mutation_sensitivity() {
    auto passed = [](std::string_view suite, Mutation m) {
        VerifyOptions opts;
        opts.mutation = m;
        bool ok = true;
        for (const auto &rep : run_suite(suite, opts)) {
            ok = ok && rep.passed();
        }
        return ok;
    };
    const bool clean = passed("all", Mutation::None);
    const bool w_gadgets = passed("gadgets", Mutation::FlipWPolarity);
    const bool w_reductions = passed("reductions", Mutation::FlipWPolarity);
    const bool ps_reductions = passed("reductions", Mutation::FlipPostselectBit);
    return {clean && !w_gadgets && !w_reductions && !ps_reductions,
            fmt("unmutated suites pass: %s; flipped W polarity detected by gadgets: %s, by reductions: %s; "
                "flipped postselection bit detected by reductions: %s",
                clean ? "yes" : "NO", w_gadgets ? "NO" : "yes", w_reductions ? "NO" : "yes",
                ps_reductions ? "NO" : "yes")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"trace-circuit identity", trace_identity},
        {"W-gadget branch", w_branch},
        {"reduction soundness, n+1 measurements", reduction_n_plus_1},
        {"reduction soundness, three measurements", reduction_three},
        {"oracle agreement", oracle_agreement},
        {"multiplicative-error calculus", multiplicative_calculus},
        {"all-zeros / Frobenius identity", shor_jordan},
        {"mutation sensitivity", mutation_sensitivity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::printf("%s criterion %zu: %s -- %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

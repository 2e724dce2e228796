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

#include "dqc1/circuit.h"

#include <set>
#include <string>

#include "dqc1/errors.h"

namespace dqc1 {

namespace {

void check_qubit_list(const std::vector<Qubit> &qs, const char *what, std::size_t total,
                      std::vector<ValidationIssue> &out) {
    std::set<Qubit> seen;
    for (Qubit q : qs) {
        if (q >= total) {
            out.push_back({IssueKind::Wiring, std::string(what) + ": qubit " + std::to_string(q) +
                                                  " out of range for " + std::to_string(total) + " qubits"});
        }
        if (!seen.insert(q).second) {
            out.push_back({IssueKind::Contract, std::string(what) + ": qubit " + std::to_string(q) + " repeated"});
        }
    }
}

[[noreturn]] void throw_issues(const std::vector<ValidationIssue> &issues) {
    std::string msg;
    bool all_wiring = true, all_unitarity = true;
    for (const auto &i : issues) {
        msg += (msg.empty() ? "" : "; ") + i.message;
        all_wiring &= i.kind == IssueKind::Wiring;
        all_unitarity &= i.kind == IssueKind::Unitarity;
    }
    if (all_wiring) {
        throw WiringError(msg);
    }
    if (all_unitarity) {
        throw UnitarityError(msg);
    }
    throw ValidationError(msg);
}

}  // namespace

std::vector<Qubit> Dqc1Circuit::mixed_qubits() const {
    std::set<Qubit> clean(clean_qubits.begin(), clean_qubits.end());
    std::vector<Qubit> out;
    for (Qubit q = 0; q < total_qubits(); ++q) {
        if (!clean.contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<ValidationIssue> validate(const Circuit &c) {
    std::vector<ValidationIssue> out;
    if (c.total_qubits == 0) {
        out.push_back({IssueKind::Contract, "total_qubits must be positive"});
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        for (auto &issue : gate_issues(c.gates[i], c.total_qubits)) {
            issue.message = "gate " + std::to_string(i) + ": " + issue.message;
            out.push_back(std::move(issue));
        }
    }
    return out;
}

std::vector<ValidationIssue> validate(const Dqc1Circuit &c) {
    auto out = validate(c.circuit);
    const std::size_t total = c.total_qubits();
    if (c.clean_qubits.empty()) {
        out.push_back({IssueKind::Contract, "clean_qubits must be non-empty"});
    }
    if (c.measured.empty()) {
        out.push_back({IssueKind::Contract, "measure must be non-empty"});
    }
    check_qubit_list(c.clean_qubits, "clean_qubits", total, out);
    check_qubit_list(c.measured, "measure", total, out);
    std::set<Qubit> measured(c.measured.begin(), c.measured.end());
    for (auto [q, bit] : c.postselect.assignments) {
        if (!measured.contains(q)) {
            out.push_back({IssueKind::Contract, "postselect: qubit " + std::to_string(q) + " is not measured"});
        }
        if (bit > 1) {
            out.push_back({IssueKind::Contract, "postselect: qubit " + std::to_string(q) + " must select 0 or 1"});
        }
    }
    return out;
}

void require_valid(const Circuit &c) {
    auto issues = validate(c);
    if (!issues.empty()) {
        throw_issues(issues);
    }
}

void require_valid(const Dqc1Circuit &c) {
    auto issues = validate(c);
    if (!issues.empty()) {
        throw_issues(issues);
    }
}

Matrix circuit_matrix(const Circuit &c, const SimConfig &config) {
    if (c.total_qubits > config.matrix_cap) {
        throw ResourceError("circuit_matrix: " + std::to_string(c.total_qubits) + " qubits exceeds cap " +
                            std::to_string(config.matrix_cap));
    }
    require_valid(c);
    Matrix u = Matrix::identity(std::size_t{1} << c.total_qubits);
    for (const Gate &g : c.gates) {
        u = SparseOperator::embed(local_matrix(g), gate_qubits(g), c.total_qubits).apply_left(u);
    }
    return u;
}

}  // namespace dqc1

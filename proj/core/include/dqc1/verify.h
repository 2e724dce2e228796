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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dqc1 {

/// Deliberate corruptions used to show the suites are not vacuous.
enum class Mutation {
    None,
    /// Flip the first control polarity of the MCX inside every emitted W / W'.
    FlipWPolarity,
    /// Flip one postselected bit of every compiled reduction.
    FlipPostselectBit,
};

struct VerifyOptions {
    Mutation mutation = Mutation::None;
    std::uint64_t seed = 20140224;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    /// Worst observed deviation (or the quantity compared against threshold).
    double residual = 0;
    double threshold = 0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string> &suite_names();

/// Runs one of "qstate", "gadgets", "reductions", "analysis" or "all".
/// Throws ContractError for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions &options = {});

Mutation mutation_from_name(std::string_view name);

}  // namespace dqc1

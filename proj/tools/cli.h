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

#include <iosfwd>
#include <string>
#include <vector>

namespace dqc1::cli {

/// Exit codes of the dqc1 tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kResourceCap = 3,
    kPostselectionImpossible = 4,
};

/// Runs one command. `args` excludes the program name. Documents go to `out`,
/// diagnostics to `err`; nothing is written to `out` when the command fails.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dqc1::cli

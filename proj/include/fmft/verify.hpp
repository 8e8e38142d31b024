// Copyright 2026 The FMFT Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fmft/transforms.hpp"

namespace fmft {

enum class VerifyLevel { kQuick, kFull };

struct CheckResult {
    std::string name;
    bool passed{false};
    /// Worst deviation seen (or a count, for exact checks).
    double measured{0.0};
    double tolerance{0.0};
    double seconds{0.0};
    std::string detail;
};

using CheckSink = std::function<void(const CheckResult &)>;

/**
 * Runs the module invariants. kQuick stays at N <= 8; kFull adds N = 16 and
 * N = 64 with M <= 2. `kernel` lets a caller run the same checks against a
 * deliberately broken sign convention.
 */
std::vector<CheckResult> run_verification(VerifyLevel level,
                                          const KernelOptions &kernel = {},
                                          unsigned threads = 1,
                                          const CheckSink &sink = {});

} // namespace fmft

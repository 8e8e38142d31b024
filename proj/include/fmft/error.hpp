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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmft {

/// Failure categories. Each maps to a stable token used by the CLI as the
/// machine-readable prefix of its error line.
enum class Errc {
    InvalidArgument,
    NotUnitary,
    NotHermitian,
    SectorLeakage,
    BudgetExceeded,
    CapExceeded,
    Parse,
    Io,
    NormViolation,
    OracleMismatch,
    Numerical,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument:
        return "invalid-argument";
    case Errc::NotUnitary:
        return "not-unitary";
    case Errc::NotHermitian:
        return "not-hermitian";
    case Errc::SectorLeakage:
        return "sector-leakage";
    case Errc::BudgetExceeded:
        return "budget-exceeded";
    case Errc::CapExceeded:
        return "cap-exceeded";
    case Errc::Parse:
        return "parse";
    case Errc::Io:
        return "io";
    case Errc::NormViolation:
        return "norm-violation";
    case Errc::OracleMismatch:
        return "oracle-mismatch";
    case Errc::Numerical:
        return "numerical";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Throws Error(code, message) unless cond holds.
inline void require(bool cond, Errc code, const std::string &message) {
    if (!cond) {
        throw Error(code, message);
    }
}

} // namespace fmft

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

/**
 * @file io.hpp
 * File formats.
 *
 * State (JSON):
 *   {"n": int, "m": int, "amplitudes": [{"mask": uint, "re": float, "im": float}, ...]}
 *   Omitted masks have zero amplitude; every mask must have popcount m.
 *
 * Gate list (JSON):
 *   {"n": int, "gates": [{"type": "givens", "x": int, "y": int, "theta": float}
 *                      | {"type": "phase", "site": int, "phi": float}
 *                      | {"type": "permute", "perm": [int, ...]}]}
 *   Angles in radians; perm lists the images of sites 1..N.
 *
 * Band table (CSV): header "q,k,K,energy", one row per eigenvalue, values
 * printed with 17 significant digits.
 */

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fmft/bethe.hpp"
#include "fmft/fock.hpp"
#include "fmft/transforms.hpp"

namespace fmft::io {

StateVector parse_state(std::string_view text);
/// Nonzero amplitudes only, in basis order.
std::string dump_state(const StateVector &v);

GateSequence parse_gates(std::string_view text);
std::string dump_gates(const GateSequence &seq);

void write_band_csv(std::ostream &out, const BandDiagram &diagram);

/// Gnuplot script plotting energy against K from `csv_name`.
void write_gnuplot_script(std::ostream &out, const std::string &csv_name,
                          const ChainParams &params);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

} // namespace fmft::io

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

#include <filesystem>
#include <random>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "fmft/error.hpp"
#include "fmft/io.hpp"

#include "TestHelpers.hpp"

using namespace fmft;
using namespace fmft::test;

namespace {

Errc parse_error_code(const std::string &text, bool gates) {
    try {
        if (gates) {
            io::parse_gates(text);
        } else {
            io::parse_state(text);
        }
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected a parse error for: " << text);
    return Errc::Numerical;
}

} // namespace

TEST_CASE("state files round trip exactly", "[io]") {
    std::mt19937_64 rng(41);
    for (auto [n, m] : {std::pair{4, 2}, {8, 3}, {64, 1}, {5, 0}}) {
        const StateVector v = random_state(enumerate_basis(n, m), rng);
        const StateVector w = io::parse_state(io::dump_state(v));
        CHECK(w.basis() == v.basis());
        CHECK(max_abs_diff(v, w) == 0.0);
    }
}

TEST_CASE("state file layout", "[io]") {
    const StateVector v = io::parse_state(
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 2, "re": 1.0, "im": 0.0}]})");
    CHECK(v.amplitude(2) == Complex(1.0));
    CHECK(v.amplitude(1) == Complex(0.0));

    // Zero amplitudes are not written.
    const std::string text = io::dump_state(v);
    CHECK(text.find("\"mask\": 2") != std::string::npos);
    CHECK(text.find("\"mask\": 1") == std::string::npos);

    const StateVector big = io::parse_state(
        R"({"n": 64, "m": 1, "amplitudes": [{"mask": 9223372036854775808, "re": 0.5, "im": -0.5}]})");
    CHECK(big.amplitude(site_bit(64)) == Complex(0.5, -0.5));
}

TEST_CASE("malformed state files", "[io]") {
    const char *bad[] = {
        "not json",
        "[]",
        R"({"m": 1, "amplitudes": []})",
        R"({"n": 2, "amplitudes": []})",
        R"({"n": 2, "m": 1})",
        R"({"n": 2, "m": 1, "amplitudes": {}})",
        R"({"n": 0, "m": 0, "amplitudes": []})",
        R"({"n": 65, "m": 1, "amplitudes": []})",
        R"({"n": 2, "m": 3, "amplitudes": []})",
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 3, "re": 1, "im": 0}]})",
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 4, "re": 1, "im": 0}]})",
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 1, "re": 1}]})",
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 1, "re": "x", "im": 0}]})",
        R"({"n": 2, "m": 1, "amplitudes": [{"mask": 1, "re": 1, "im": 0}, {"mask": 1, "re": 1, "im": 0}]})",
    };
    for (const char *text : bad) {
        CHECK(parse_error_code(text, false) == Errc::Parse);
    }
}

TEST_CASE("gate files round trip exactly", "[io]") {
    for (const GateSequence &seq :
         {fmft_sequence(8), mft_fold_compile(dft_matrix(5)), GateSequence{3, {}}}) {
        CHECK(io::parse_gates(io::dump_gates(seq)) == seq);
    }
}

TEST_CASE("gate file layout", "[io]") {
    const GateSequence seq = io::parse_gates(R"({"n": 3, "gates": [
        {"type": "givens", "x": 1, "y": 3, "theta": 0.5},
        {"type": "phase", "site": 2, "phi": -1.0},
        {"type": "permute", "perm": [2, 3, 1]}]})");
    REQUIRE(seq.gates.size() == 3);
    CHECK(std::get<GivensGate>(seq.gates[0]) == GivensGate{1, 3, 0.5});
    CHECK(std::get<PhaseGate>(seq.gates[1]) == PhaseGate{2, -1.0});
    CHECK(std::get<PermuteGate>(seq.gates[2]).perm == std::vector<int>{2, 3, 1});
}

TEST_CASE("malformed gate files", "[io]") {
    const char *bad[] = {
        "{",
        R"({"gates": []})",
        R"({"n": 3})",
        R"({"n": 3, "gates": [{"x": 1, "y": 2, "theta": 0}]})",
        R"({"n": 3, "gates": [{"type": "swap"}]})",
        R"({"n": 3, "gates": [{"type": "givens", "x": 1, "y": 2}]})",
        R"({"n": 3, "gates": [{"type": "givens", "x": 2, "y": 1, "theta": 0}]})",
        R"({"n": 3, "gates": [{"type": "givens", "x": 1, "y": 4, "theta": 0}]})",
        R"({"n": 3, "gates": [{"type": "phase", "site": 0, "phi": 0}]})",
        R"({"n": 3, "gates": [{"type": "permute", "perm": [1, 1, 2]}]})",
        R"({"n": 3, "gates": [{"type": "permute", "perm": [1, 2]}]})",
        R"({"n": 0, "gates": []})",
    };
    for (const char *text : bad) {
        CHECK(parse_error_code(text, true) == Errc::Parse);
    }
}

TEST_CASE("band csv", "[io]") {
    const BandDiagram d = assemble_band_diagram({4, 1, 1.0, 0.0});
    std::ostringstream out;
    io::write_band_csv(out, d);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "q,k,K,energy");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
    }
    CHECK(rows == 4);
    CHECK(out.str().find("\n0,0,3.1415926535897931,-2\n") != std::string::npos);

    std::ostringstream plot;
    io::write_gnuplot_script(plot, "bands.csv", d.params);
    CHECK(plot.str().find("'bands.csv'") != std::string::npos);
}

TEST_CASE("file helpers", "[io]") {
    const auto dir = std::filesystem::temp_directory_path() / "fmft_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "x.txt";
    io::write_file(path, "hello\n");
    CHECK(io::read_file(path) == "hello\n");
    std::filesystem::remove_all(dir);
    try {
        io::read_file(dir / "missing.json");
        FAIL("expected io error");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::Io);
    }
}

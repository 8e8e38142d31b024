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

#include "fmft/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fmft/error.hpp"

namespace fmft::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(Errc::Parse, std::string(what) + ": " + e.what());
    }
}

template <class T> T field(const json &obj, const char *key, const char *what) {
    require(obj.is_object() && obj.contains(key), Errc::Parse,
            std::string(what) + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(Errc::Parse, std::string(what) + ": field '" + key +
                                     "' has the wrong type");
    }
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

StateVector parse_state(std::string_view text) {
    const json doc = parse_json(text, "state file");
    const int n = field<int>(doc, "n", "state file");
    const int m = field<int>(doc, "m", "state file");
    require(n >= 1 && n <= kMaxSites && m >= 0 && m <= n, Errc::Parse,
            "state file: need 1 <= n <= 64 and 0 <= m <= n");
    require(doc.contains("amplitudes") && doc.at("amplitudes").is_array(),
            Errc::Parse,
            "state file: 'amplitudes' must be an array");

    StateVector v(enumerate_basis(n, m));
    std::vector<char> seen(v.size(), 0);
    for (const auto &e : doc.at("amplitudes")) {
        const auto mask = field<std::uint64_t>(e, "mask", "state file");
        require(v.basis().contains(mask), Errc::Parse,
                "state file: mask " + std::to_string(mask) +
                    " is not an n=" + std::to_string(n) +
                    " state with popcount " + std::to_string(m));
        const std::size_t i = v.basis().index(mask);
        require(!seen[i], Errc::Parse,
                "state file: mask " + std::to_string(mask) + " listed twice");
        seen[i] = 1;
        v[i] = Complex(field<double>(e, "re", "state file"),
                       field<double>(e, "im", "state file"));
    }
    return v;
}

std::string dump_state(const StateVector &v) {
    json entries = json::array();
    const auto states = v.basis().states();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != Complex(0.0)) {
            entries.push_back(
                {{"mask", states[i]}, {"re", v[i].real()}, {"im", v[i].imag()}});
        }
    }
    const json doc = {{"n", v.sites()},
                      {"m", v.basis().particles()},
                      {"amplitudes", std::move(entries)}};
    return doc.dump(2) + "\n";
}

GateSequence parse_gates(std::string_view text) {
    const json doc = parse_json(text, "gate list");
    GateSequence seq{field<int>(doc, "n", "gate list"), {}};
    require(doc.contains("gates") && doc.at("gates").is_array(), Errc::Parse,
            "gate list: 'gates' must be an array");
    for (const auto &g : doc.at("gates")) {
        const auto type = field<std::string>(g, "type", "gate list");
        if (type == "givens") {
            seq.gates.emplace_back(GivensGate{field<int>(g, "x", "gate list"),
                                              field<int>(g, "y", "gate list"),
                                              field<double>(g, "theta",
                                                            "gate list")});
        } else if (type == "phase") {
            seq.gates.emplace_back(
                PhaseGate{field<int>(g, "site", "gate list"),
                          field<double>(g, "phi", "gate list")});
        } else if (type == "permute") {
            seq.gates.emplace_back(
                PermuteGate{field<std::vector<int>>(g, "perm", "gate list")});
        } else {
            throw Error(Errc::Parse, "gate list: unknown gate type '" + type +
                                         "'");
        }
    }
    try {
        seq.validate();
    } catch (const Error &e) {
        throw Error(Errc::Parse, e.what());
    }
    return seq;
}

std::string dump_gates(const GateSequence &seq) {
    json gates = json::array();
    for (const Gate &g : seq.gates) {
        if (const auto *p = std::get_if<PhaseGate>(&g)) {
            gates.push_back({{"type", "phase"}, {"site", p->site}, {"phi", p->phi}});
        } else if (const auto *q = std::get_if<GivensGate>(&g)) {
            gates.push_back({{"type", "givens"},
                             {"x", q->x},
                             {"y", q->y},
                             {"theta", q->theta}});
        } else {
            gates.push_back(
                {{"type", "permute"}, {"perm", std::get<PermuteGate>(g).perm}});
        }
    }
    const json doc = {{"n", seq.n}, {"gates", std::move(gates)}};
    return doc.dump() + "\n";
}

void write_band_csv(std::ostream &out, const BandDiagram &diagram) {
    out << "q,k,K,energy\n";
    for (const BandEntry &e : diagram.entries) {
        for (double energy : e.energies) {
            out << e.q << ',' << format17(e.k) << ',' << format17(e.K) << ','
                << format17(energy) << '\n';
        }
    }
}

void write_gnuplot_script(std::ostream &out, const std::string &csv_name,
                          const ChainParams &params) {
    out << "# energy vs K, N=" << params.n << " M=" << params.m
        << " J=" << format17(params.hopping)
        << " U=" << format17(params.interaction) << "\n"
        << "set datafile separator ','\n"
        << "set key off\n"
        << "set xlabel 'K'\n"
        << "set ylabel 'Energy'\n"
        << "set xrange [0:2*pi]\n"
        << "set title 'N=" << params.n << ", M=" << params.m
        << ", U=" << format17(params.interaction) << "'\n"
        << "plot '" << csv_name << "' using 3:4 every ::1 with points pt 7 ps 0.5\n";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), Errc::Io, "cannot write " + path.string());
    out << contents;
    require(out.good(), Errc::Io, "write failed for " + path.string());
}

} // namespace fmft::io

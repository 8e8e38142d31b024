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

#include "fmft/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "fmft/bethe.hpp"
#include "fmft/error.hpp"

namespace fmft {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CheckResult> results;
    const CheckSink &sink;

    template <class Fn>
    void run(const std::string &name, double tolerance, Fn &&fn) {
        CheckResult r;
        r.name = name;
        r.tolerance = tolerance;
        const auto t0 = Clock::now();
        try {
            r.measured = fn(r.detail);
            r.passed = r.measured <= tolerance;
        } catch (const std::exception &e) {
            r.passed = false;
            r.measured = std::numeric_limits<double>::infinity();
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (sink) {
            sink(r);
        }
        results.push_back(std::move(r));
    }
};

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

StateVector random_state(std::shared_ptr<const SectorBasis> basis,
                         std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    StateVector v(std::move(basis));
    for (auto &a : v.amplitudes()) {
        a = Complex(gauss(rng), gauss(rng));
    }
    const double nrm = v.norm();
    for (auto &a : v.amplitudes()) {
        a /= nrm;
    }
    return v;
}

double spectrum_deviation(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

double kramers_deviation(const BandDiagram &diagram) {
    const int n = diagram.params.n;
    require(diagram.entries.size() == static_cast<std::size_t>(n),
            Errc::InvalidArgument, "no band diagram to compare");
    double d = 0.0;
    for (int q = 0; q < n; ++q) {
        const auto &a = diagram.entries[static_cast<std::size_t>(q)].energies;
        const auto &b =
            diagram.entries[static_cast<std::size_t>((n - q) % n)].energies;
        d = std::max(d, spectrum_deviation(a, b));
    }
    return d;
}

std::string tag(int n, int m) {
    return "N=" + std::to_string(n) + " M=" + std::to_string(m);
}

} // namespace

std::vector<CheckResult> run_verification(VerifyLevel level,
                                          const KernelOptions &kernel,
                                          unsigned threads,
                                          const CheckSink &sink) {
    const bool full = level == VerifyLevel::kFull;
    Runner runner{{}, sink};
    std::mt19937_64 rng(20260101);
    const BuildOptions build{threads, 1e-10, 1e-9};

    const int max_pow = full ? 64 : 8;
    runner.run("gate counts N<=" + std::to_string(max_pow), 0.0,
               [&](std::string &detail) {
                   double bad = 0;
                   for (int n = 2; n <= max_pow; n *= 2) {
                       const int p = std::countr_zero(static_cast<unsigned>(n));
                       const auto fmft = gate_count(fmft_sequence(n));
                       const auto fold =
                           gate_count(mft_fold_compile(dft_matrix(n)));
                       if (fmft.givens != static_cast<std::size_t>(n * p / 2) ||
                           fold.givens !=
                               static_cast<std::size_t>(n * (n - 1) / 2)) {
                           bad += 1;
                           detail += " N=" + std::to_string(n);
                       }
                   }
                   return bad;
               });

    std::vector<int> fidelity_sizes{2, 4, 8};
    if (full) {
        fidelity_sizes.insert(fidelity_sizes.end(), {16, 32, 64});
    }
    for (int n : fidelity_sizes) {
        runner.run("single-body DFT fidelity N=" + std::to_string(n), 1e-10,
                   [&](std::string &) {
                       const SingleBodyMatrix u =
                           single_body_action(fmft_sequence(n), kernel);
                       return (u - momentum_action(n)).cwiseAbs().maxCoeff();
                   });
    }

    std::vector<std::pair<int, int>> slater_cases;
    for (int n : {2, 4, 8}) {
        for (int m = 0; m <= std::min(3, n); ++m) {
            slater_cases.emplace_back(n, m);
        }
    }
    if (full) {
        slater_cases.insert(slater_cases.end(),
                            {{16, 2}, {16, 3}, {64, 1}, {64, 2}});
    }
    for (auto [n, m] : slater_cases) {
        runner.run("slater oracle " + tag(n, m), 1e-10, [&, n = n, m = m](std::string &) {
            const auto seq = fmft_sequence(n);
            const auto basis = enumerate_basis(n, m);
            double d = 0.0;
            for (Mask mask : basis->states()) {
                const ModeSet ms{n, mask};
                d = std::max(d, max_abs_diff(momentum_state(ms, seq, kernel),
                                             slater_oracle(ms)));
            }
            return d;
        });
    }

    {
        const int n = full ? 16 : 8;
        const int m = full ? 4 : 3;
        runner.run("round trip " + tag(n, m), 1e-12, [&](std::string &) {
            const auto seq = fmft_sequence(n);
            const auto inv = invert_sequence(seq);
            const auto basis = enumerate_basis(n, m);
            double d = 0.0;
            for (int trial = 0; trial < 20; ++trial) {
                const StateVector v = random_state(basis, rng);
                const StateVector w = apply_sequence(
                    apply_sequence(v, seq, kernel), inv, kernel);
                d = std::max(d, max_abs_diff(v, w));
            }
            return d;
        });
    }

    runner.run("translation eigenphase N=8 M<=3", 1e-10, [&](std::string &) {
        const int n = 8;
        const auto seq = fmft_sequence(n);
        double d = 0.0;
        for (int m = 0; m <= 3; ++m) {
            const auto basis = enumerate_basis(n, m);
            for (Mask mask : basis->states()) {
                const ModeSet ms{n, mask};
                const StateVector v = momentum_state(ms, seq, kernel);
                StateVector tv = v;
                translation_apply(tv);
                const Complex phase =
                    std::polar(1.0, quasimomentum(ms.momentum_index(), n));
                for (std::size_t i = 0; i < v.size(); ++i) {
                    d = std::max(d, std::abs(tv[i] - phase * v[i]));
                }
            }
        }
        return d;
    });

    struct SpectrumCase {
        int n, m;
        double u;
        TransformKind kind;
    };
    std::vector<SpectrumCase> cases;
    for (int m = 1; m <= 4; ++m) {
        for (double u : {0.0, 1.0, 100.0}) {
            cases.push_back({8, m, u, TransformKind::kFmft});
        }
    }
    cases.push_back({6, 2, 1.0, TransformKind::kMftFold});
    if (full) {
        for (int m : {2, 3, 4}) {
            for (double u : {0.0, 100.0}) {
                cases.push_back({16, m, u, TransformKind::kFmft});
            }
        }
    }
    for (const auto &c : cases) {
        const ChainParams params{c.n, c.m, 1.0, c.u};
        const std::string name =
            tag(c.n, c.m) + " U=" + std::to_string(static_cast<int>(c.u)) +
            (c.kind == TransformKind::kMftFold ? " (fold)" : "");
        BandDiagram diagram;
        runner.run("spectrum vs full ED " + name, 1e-9, [&](std::string &) {
            diagram = assemble_band_diagram(
                params, MomentumTransform::make(c.n, c.kind), build);
            return spectrum_deviation(diagram.all_energies(),
                                      full_ed_oracle(params).values);
        });
        runner.run("sector leakage " + name, 1e-10, [&](std::string &) {
            require(!diagram.entries.empty(), Errc::InvalidArgument,
                    "no band diagram to inspect");
            return diagram.max_leakage;
        });
        runner.run("kramers pairing " + name, 1e-9,
                   [&](std::string &) { return kramers_deviation(diagram); });
    }

    if (full) {
        runner.run("band clusters N=64 M=2 U=100", 0.0, [&](std::string &detail) {
            const ChainParams params{64, 2, 1.0, 100.0};
            const BandDiagram diagram = assemble_band_diagram(params, build);
            const auto energies = diagram.all_energies();
            const auto clusters = find_clusters(energies, params);
            detail = std::to_string(clusters.size()) + " clusters";
            for (const auto &c : clusters) {
                detail += " [" + std::to_string(c.count) + " @ " +
                          std::to_string(c.mean) + "]";
            }
            const bool ok = clusters.size() == 2 && clusters[0].count == 1952 &&
                            clusters[1].count == 64;
            return ok ? 0.0 : 1.0;
        });
    }
    return runner.results;
}

} // namespace fmft

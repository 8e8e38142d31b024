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

// fmft: compile mode Fourier transforms, apply them to Fock states, and
// compute quasimomentum band diagrams of the periodic interacting chain.
//
// Every failure prints exactly one line "error: <code>: <message>" to stderr
// and exits nonzero. Options can also be set through FMFT_* environment
// variables (FMFT_N, FMFT_M, FMFT_J, FMFT_U, FMFT_THREADS, FMFT_BUDGET, ...).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "fmft/bethe.hpp"
#include "fmft/error.hpp"
#include "fmft/fock.hpp"
#include "fmft/io.hpp"
#include "fmft/transforms.hpp"
#include "fmft/verify.hpp"

namespace {

using namespace fmft;

struct RunConfig {
    int n{0};
    int m{0};
    double hopping{1.0};
    double interaction{0.0};
    std::string transform{"auto"};
    std::string out;
    std::string gates_path;
    std::string state_path;
    std::string plot_path;
    std::string level{"quick"};
    std::string mutate{"none"};
    bool inverse{false};
    bool oracle{false};
    unsigned threads{std::max(1U, std::thread::hardware_concurrency())};
    double budget{1e11};
    std::uint64_t oracle_cap{kDefaultOracleCap};
    double tol_norm{1e-12};
    double tol_oracle{1e-9};
    double tol_leakage{1e-10};
    double tol_hermitian{1e-9};
};

void validate_sites(int n) {
    require(n >= 1 && n <= kMaxSites, Errc::InvalidArgument,
            "--n must be in 1..64, got " + std::to_string(n));
}

int cmd_compile(const RunConfig &cfg) {
    validate_sites(cfg.n);
    GateSequence seq;
    if (cfg.transform == "fmft") {
        seq = fmft_sequence(cfg.n);
    } else if (cfg.transform == "mft-dft") {
        require(cfg.n >= 2, Errc::InvalidArgument,
                "mft-dft needs --n >= 2, got " + std::to_string(cfg.n));
        seq = mft_fold_compile(dft_matrix(cfg.n));
    } else {
        throw Error(Errc::InvalidArgument,
                    "--transform must be fmft or mft-dft for compile");
    }
    io::write_file(cfg.out, io::dump_gates(seq));
    const GateCounts c = gate_count(seq);
    std::cout << "transform: " << cfg.transform << "\n"
              << "n: " << cfg.n << "\n"
              << "givens: " << c.givens << "\n"
              << "phase: " << c.phase << "\n"
              << "permute: " << c.permute << "\n";
    return 0;
}

int cmd_transform(const RunConfig &cfg) {
    GateSequence seq = io::parse_gates(io::read_file(cfg.gates_path));
    const StateVector in = io::parse_state(io::read_file(cfg.state_path));
    require(in.sites() == seq.n, Errc::InvalidArgument,
            "state has n=" + std::to_string(in.sites()) +
                " but gate list has n=" + std::to_string(seq.n));
    if (cfg.inverse) {
        seq = invert_sequence(seq);
    }
    const StateVector out = apply_sequence(in, seq);
    const double before = in.norm();
    const double after = out.norm();
    const double change =
        before > 0.0 ? std::abs(after - before) / before : std::abs(after);
    require(change <= cfg.tol_norm, Errc::NormViolation,
            "norm changed by " + std::to_string(change) + " (tolerance " +
                std::to_string(cfg.tol_norm) + ")");
    io::write_file(cfg.out, io::dump_state(out));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", change);
    std::cout << "gates: " << seq.gates.size() << "\n"
              << "direction: " << (cfg.inverse ? "inverse" : "forward") << "\n"
              << "norm change: " << buf << "\n";
    return 0;
}

MomentumTransform pick_transform(const RunConfig &cfg) {
    if (cfg.transform == "auto") {
        return MomentumTransform::automatic(cfg.n);
    }
    if (cfg.transform == "fmft") {
        return MomentumTransform::make(cfg.n, TransformKind::kFmft);
    }
    if (cfg.transform == "mft-dft") {
        return MomentumTransform::make(cfg.n, TransformKind::kMftFold);
    }
    throw Error(Errc::InvalidArgument,
                "--transform must be auto, fmft or mft-dft");
}

int cmd_bands(const RunConfig &cfg) {
    const ChainParams params{cfg.n, cfg.m, cfg.hopping, cfg.interaction};
    params.validate();
    const MomentumTransform transform = pick_transform(cfg);
    const double ops = estimate_build_ops(params, transform.forward);
    if (ops > cfg.budget) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "estimated build cost %.3e ops exceeds budget %.3e "
                      "(raise --budget to force)",
                      ops, cfg.budget);
        throw Error(Errc::BudgetExceeded, buf);
    }

    const BuildOptions build{cfg.threads, cfg.tol_leakage, cfg.tol_hermitian};
    const BandDiagram diagram = assemble_band_diagram(params, transform, build);

    std::ostringstream csv;
    io::write_band_csv(csv, diagram);
    io::write_file(cfg.out, csv.str());
    if (!cfg.plot_path.empty()) {
        std::ostringstream gp;
        io::write_gnuplot_script(gp, cfg.out, params);
        io::write_file(cfg.plot_path, gp.str());
    }

    const auto energies = diagram.all_energies();
    std::cout << "rows: " << diagram.total() << "\n"
              << "max leakage: " << diagram.max_leakage << "\n";
    const auto clusters = find_clusters(energies, params);
    std::cout << "clusters: " << clusters.size() << "\n";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        std::cout << "  cluster " << i << ": count " << clusters[i].count
                  << " mean " << clusters[i].mean << " range ["
                  << clusters[i].lo << ", " << clusters[i].hi << "]\n";
    }

    if (cfg.oracle) {
        if (binomial(params.n, params.m) > cfg.oracle_cap) {
            std::cerr << "warning: oracle skipped, dimension "
                      << binomial(params.n, params.m) << " exceeds cap "
                      << cfg.oracle_cap << "\n";
            return 0;
        }
        const auto reference = full_ed_oracle(params, cfg.oracle_cap).values;
        double dev = 0.0;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            dev = std::max(dev, std::abs(reference[i] - energies[i]));
        }
        std::cout << "oracle deviation: " << dev << "\n";
        require(dev <= cfg.tol_oracle, Errc::OracleMismatch,
                "band spectrum deviates from full ED by " +
                    std::to_string(dev));
    }
    return 0;
}

int cmd_verify(const RunConfig &cfg) {
    VerifyLevel level = VerifyLevel::kQuick;
    if (cfg.level == "full") {
        level = VerifyLevel::kFull;
    } else if (cfg.level != "quick") {
        throw Error(Errc::InvalidArgument, "--level must be quick or full");
    }
    KernelOptions kernel;
    if (cfg.mutate == "givens-sign") {
        kernel.flip_givens_sign = true;
    } else if (cfg.mutate == "no-parity") {
        kernel.permutation_sign = PermutationSign::kNone;
    } else if (cfg.mutate != "none") {
        throw Error(Errc::InvalidArgument,
                    "--mutate must be none, givens-sign or no-parity");
    }
    std::size_t failed = 0;
    run_verification(level, kernel, cfg.threads, [&](const CheckResult &r) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  (%.3g <= %.3g, %.2fs)", r.measured,
                      r.tolerance, r.seconds);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << buf;
        if (!r.detail.empty()) {
            std::cout << "  " << r.detail;
        }
        std::cout << std::endl;
        failed += r.passed ? 0 : 1;
    });
    if (failed > 0) {
        throw Error(Errc::OracleMismatch,
                    std::to_string(failed) + " verification check(s) failed");
    }
    std::cout << "all checks passed\n";
    return 0;
}

std::string single_line(std::string s) {
    for (char &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mode Fourier transforms on fermionic Fock states and "
                 "quasimomentum bands of the periodic interacting chain"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_threads = [&](CLI::App *cmd) {
        cmd->add_option("--threads", cfg.threads, "Worker threads")
            ->envname("FMFT_THREADS")
            ->check(CLI::PositiveNumber);
    };

    auto *compile = app.add_subcommand("compile", "Write a gate list");
    compile->add_option("transform", cfg.transform, "fmft or mft-dft")
        ->required()
        ->check(CLI::IsMember({"fmft", "mft-dft"}));
    compile->add_option("--n", cfg.n, "Number of modes")
        ->required()
        ->envname("FMFT_N");
    compile->add_option("--out", cfg.out, "Gate-list JSON path")->required();

    auto *transform = app.add_subcommand("transform", "Apply a gate list");
    transform->add_option("--gates", cfg.gates_path, "Gate-list JSON")
        ->required();
    transform->add_option("--state", cfg.state_path, "State JSON")->required();
    transform->add_flag("--inverse", cfg.inverse, "Apply the inverse sequence");
    transform->add_option("--out", cfg.out, "Output state JSON")->required();
    transform->add_option("--tol-norm", cfg.tol_norm, "Allowed norm change")
        ->envname("FMFT_TOL_NORM");

    auto *bands = app.add_subcommand("bands", "Band diagram CSV");
    bands->add_option("--n", cfg.n, "Sites")->required()->envname("FMFT_N");
    bands->add_option("--m", cfg.m, "Particles")->required()->envname("FMFT_M");
    bands->add_option("--j", cfg.hopping, "Hopping J")->envname("FMFT_J");
    bands->add_option("--u", cfg.interaction, "Interaction U")
        ->envname("FMFT_U");
    bands->add_option("--out", cfg.out, "CSV path")->required();
    bands->add_option("--plot", cfg.plot_path, "Gnuplot script path");
    bands->add_option("--transform", cfg.transform, "auto, fmft or mft-dft")
        ->check(CLI::IsMember({"auto", "fmft", "mft-dft"}))
        ->envname("FMFT_TRANSFORM");
    bands->add_flag("--oracle", cfg.oracle, "Cross-check with full ED");
    bands->add_option("--oracle-cap", cfg.oracle_cap, "Max full-ED dimension")
        ->envname("FMFT_ORACLE_CAP");
    bands->add_option("--budget", cfg.budget, "Max estimated build ops")
        ->envname("FMFT_BUDGET");
    bands->add_option("--tol-oracle", cfg.tol_oracle, "Max oracle deviation")
        ->envname("FMFT_TOL_ORACLE");
    bands->add_option("--tol-leakage", cfg.tol_leakage,
                      "Max out-of-sector weight")
        ->envname("FMFT_TOL_LEAKAGE");
    bands->add_option("--tol-hermitian", cfg.tol_hermitian,
                      "Max sector anti-Hermitian part")
        ->envname("FMFT_TOL_HERMITIAN");
    add_threads(bands);

    auto *verify = app.add_subcommand("verify", "Run the invariant checks");
    verify->add_option("--level", cfg.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--mutate", cfg.mutate,
                       "Break a sign convention on purpose: none, "
                       "givens-sign, no-parity")
        ->check(CLI::IsMember({"none", "givens-sign", "no-parity"}));
    add_threads(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: usage: " << single_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (compile->parsed()) {
            return cmd_compile(cfg);
        }
        if (transform->parsed()) {
            return cmd_transform(cfg);
        }
        if (bands->parsed()) {
            return cmd_bands(cfg);
        }
        return cmd_verify(cfg);
    } catch (const Error &e) {
        std::cerr << "error: " << to_string(e.code()) << ": "
                  << single_line(e.what()) << "\n";
    } catch (const std::exception &e) {
        std::cerr << "error: internal: " << single_line(e.what()) << "\n";
    }
    return 1;
}

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
 * @file bethe.hpp
 * Periodic spinless-fermion chain with nearest-neighbour hopping J and
 * interaction U, block-diagonalized by quasimomentum.
 *
 *     H = -J sum_j (c+_j c_{j+1} + h.c.) + U sum_j n_{j+1} n_j,  c_{N+1} = c_1
 *
 * Momentum eigenstates are products of transformed modes f+_{j_1} ... f+_{j_M}
 * |0>. Their label q = sum (j_i - 1) mod N fixes the translation eigenvalue
 * e^{ik}, k = 2 pi q / N, and the band axis uses K = mod(k - pi, 2 pi).
 * Hopping is diagonal in that basis; the interaction block of each sector is
 * obtained by sandwiching the site-diagonal interaction between the forward
 * and inverse mode transforms.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fmft/fock.hpp"
#include "fmft/transforms.hpp"

namespace fmft {

struct ChainParams {
    int n{0};
    int m{0};
    double hopping{1.0};
    double interaction{0.0};

    /// Ring needs N >= 3; 0 <= M <= N; finite J, U.
    void validate() const;
};

/// Momentum-mode labels j_1 < ... < j_M in 1..N, stored as a mask.
struct ModeSet {
    int n{0};
    Mask mask{0};

    static ModeSet from_modes(int n, std::span<const int> modes);
    [[nodiscard]] std::vector<int> modes() const;
    [[nodiscard]] int size() const noexcept { return std::popcount(mask); }
    /// sum (j_i - 1) mod N
    [[nodiscard]] int momentum_index() const noexcept;

    friend bool operator==(const ModeSet &, const ModeSet &) = default;
};

struct MomentumSector {
    int q{0};
    double k{0.0};
    double K{0.0};
    std::vector<ModeSet> basis;
};

/// k = 2 pi q / N
double quasimomentum(int q, int n);
/// K = mod(k - pi, 2 pi), in [0, 2 pi)
double band_axis(int q, int n);

/// U x (occupied bonds (j, j+1), wrapping N -> 1).
double interaction_energy(OccupationState state, const ChainParams &params);
/// Number of occupied nearest-neighbour bonds on the ring of n sites.
int occupied_bonds(Mask mask, int n) noexcept;

/// sum_i -2 J cos(2 pi (j_i - 1) / N)
double hopping_energy(const ModeSet &modes, const ChainParams &params);

/// One sector per residue q = 0..N-1, some possibly empty.
std::vector<MomentumSector> sector_partition(const ChainParams &params);

/// Forward mode transform together with its exact inverse.
struct MomentumTransform {
    GateSequence forward;
    GateSequence inverse;

    explicit MomentumTransform(GateSequence seq);
    /// Picks the radix-2 sequence or the folding compiler.
    static MomentumTransform make(int n, TransformKind kind);
    /// Radix-2 when N is a power of two, folding otherwise.
    static MomentumTransform automatic(int n);
};

/// f+_{j_1} ... f+_{j_M} |0> in the site basis, via the gate sequence.
StateVector momentum_state(const ModeSet &modes, const GateSequence &transform,
                           const KernelOptions &options = {});

/// Same state by brute force: the amplitude on sites s_1 < ... < s_M is
/// det[ W^{-(j_i - 1)(s_m - 1)} / sqrt(N) ].
StateVector slater_oracle(const ModeSet &modes);

struct BuildOptions {
    unsigned threads{1};
    double leakage_tolerance{1e-10};
    double hermitian_tolerance{1e-9};
};

struct SectorMatrix {
    /// Full block: interaction plus diagonal hopping.
    Eigen::MatrixXcd hamiltonian;
    /// Interaction part alone, for <H_I> of eigenstates.
    Eigen::MatrixXcd interaction;
    /// Largest out-of-sector weight of any column, relative to its norm.
    double leakage{0.0};
    /// max |A - A^dagger|
    double hermiticity_defect{0.0};
};

/// Throws Errc::SectorLeakage or Errc::NotHermitian past the tolerances.
SectorMatrix build_sector_matrix(const MomentumSector &sector,
                                 const ChainParams &params,
                                 const MomentumTransform &transform,
                                 const BuildOptions &options = {});

struct SectorSpectrum {
    std::vector<double> values;
    /// Columns are eigenvectors; empty unless requested.
    Eigen::MatrixXcd vectors;
};

SectorSpectrum diagonalize_sector(const Eigen::MatrixXcd &matrix,
                                  bool want_vectors = false,
                                  double hermitian_tolerance = 1e-9);

struct BandEntry {
    int q{0};
    double k{0.0};
    double K{0.0};
    std::vector<double> energies;
    /// <H_I> of each eigenstate, same order as energies.
    std::vector<double> interaction_average;
};

struct BandDiagram {
    ChainParams params;
    std::vector<BandEntry> entries;
    double max_leakage{0.0};

    [[nodiscard]] std::size_t total() const noexcept;
    /// Every eigenvalue, ascending.
    [[nodiscard]] std::vector<double> all_energies() const;
};

BandDiagram assemble_band_diagram(const ChainParams &params,
                                  const MomentumTransform &transform,
                                  const BuildOptions &options = {});
BandDiagram assemble_band_diagram(const ChainParams &params,
                                  const BuildOptions &options = {});

struct Cluster {
    double lo{0.0};
    double hi{0.0};
    double mean{0.0};
    std::size_t count{0};
};

/**
 * Splits ascending energies wherever consecutive values differ by more than
 * max(U/2, 10 J). Only active for U >= 10 J; below that one cluster is
 * returned.
 */
std::vector<Cluster> find_clusters(std::span<const double> sorted_energies,
                                   const ChainParams &params);

/// Cluster index for every value of `sorted_energies`.
std::vector<int> cluster_labels(std::span<const double> sorted_energies,
                                std::span<const Cluster> clusters);

/// Ops to build every sector: 2 x gates x dim^2 (gate cost O(dim), two
/// sequence applications per column).
double estimate_build_ops(const ChainParams &params,
                          const GateSequence &transform);

inline constexpr std::uint64_t kDefaultOracleCap = 20000;

/// Hamiltonian in the site Fock basis (ascending masks).
Eigen::MatrixXd full_ed_hamiltonian(const ChainParams &params,
                                    std::uint64_t cap = kDefaultOracleCap);

struct FullSpectrum {
    std::vector<double> values;
    Eigen::MatrixXd vectors;
};

/// Exact diagonalization in the site basis, independent of the transforms.
FullSpectrum full_ed_oracle(const ChainParams &params,
                            std::uint64_t cap = kDefaultOracleCap,
                            bool want_vectors = false);

} // namespace fmft

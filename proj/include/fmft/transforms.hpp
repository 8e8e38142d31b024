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
 * @file transforms.hpp
 * Gate sequences that realize single-body mode transforms on Fock states.
 *
 * A GateSequence is applied to kets first-to-last. Its single-body action is
 * the N x N matrix whose column k holds the amplitudes obtained from the
 * one-particle state c+_k |0>.
 *
 * The mode Fourier transform uses f_j = sum_k D(j,k) c_k with
 * D = dft_matrix(N). The ket map c+_j |0> -> f+_j |0> therefore has
 * single-body action D^dagger (equal to conj(D), since D is symmetric);
 * momentum_action(N) returns it. fmft_sequence(N) realizes exactly this map.
 */

#include <cstddef>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fmft/fock.hpp"

namespace fmft {

struct PhaseGate {
    int site;
    double phi;
    friend bool operator==(const PhaseGate &, const PhaseGate &) = default;
};

struct GivensGate {
    int x;
    int y;
    double theta;
    friend bool operator==(const GivensGate &, const GivensGate &) = default;
};

/// perm[i-1] is the image of site i.
struct PermuteGate {
    std::vector<int> perm;
    friend bool operator==(const PermuteGate &, const PermuteGate &) = default;
};

using Gate = std::variant<PhaseGate, GivensGate, PermuteGate>;

struct GateSequence {
    int n{0};
    std::vector<Gate> gates;

    /// Throws unless every gate respects n.
    void validate() const;

    friend bool operator==(const GateSequence &,
                           const GateSequence &) = default;
};

struct GateCounts {
    std::size_t givens{0};
    std::size_t phase{0};
    std::size_t permute{0};
    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// Row j, column k: coefficient of c_k in the expansion of the mode f_j, or
/// (for single_body_action) the image of c+_k on site j.
using SingleBodyMatrix = Eigen::MatrixXcd;

/// Kernel switches for mutation checks. The defaults are the only correct
/// settings; anything else deliberately breaks fermionic signs.
struct KernelOptions {
    bool flip_givens_sign{false};
    PermutationSign permutation_sign{PermutationSign::kSortedParity};
};

inline constexpr double kUnitarityTolerance = 1e-10;

// Gate lists and single-body matrices may be wider than a Fock state.
inline constexpr int kMaxModes = 1024;

[[nodiscard]] bool is_power_of_two(int n) noexcept;

/// D(j,k) = W^{(j-1)(k-1)} / sqrt(N), W = exp(2 pi i / N).
SingleBodyMatrix dft_matrix(int n);

/// Single-body action of the ket map c+_j|0> -> f+_j|0>: dft_matrix(N)^dagger.
SingleBodyMatrix momentum_action(int n);

/// max |(U U^dagger - I)_{ij}|
double unitarity_defect(const SingleBodyMatrix &u);

/// Which radix-2 sequence to emit. kConjugate replaces every twiddle phase by
/// its conjugate (W_n -> W_n^{-1}); the result realizes the inverse transform.
enum class FmftVariant { kForward, kConjugate };

/**
 * Radix-2 FMFT for N = 2^p.
 *
 * Stages l = p..1 (widest stride first). Within a stage, for each block j and
 * offset k, a Givens(x, y, pi/2) is followed by Phase(y, pi(1 - k 2^{1-l}))
 * where x = 1 + k + (j-1) 2^l and y = x + 2^{l-1}. A bit-reverse mode
 * permutation closes the sequence. (N log2 N)/2 Givens gates in total.
 */
GateSequence fmft_sequence(int n, FmftVariant variant = FmftVariant::kForward);

/// Adjoint in reverse order: exact inverse of any sequence.
GateSequence invert_sequence(const GateSequence &seq);

/// Applies gates first-to-last. Cost is O(gates x sector dimension).
StateVector apply_sequence(StateVector v, const GateSequence &seq,
                           const KernelOptions &options = {});

/**
 * Compiles a unitary into nearest-neighbour Givens gates and phases by
 * row-by-row folding: each row is dephased, then its trailing coefficients
 * are rotated into the diagonal one from the right end inwards. A dense
 * target needs N(N-1)/2 Givens gates. single_body_action of the result
 * equals `target`.
 */
GateSequence mft_fold_compile(const SingleBodyMatrix &target);

SingleBodyMatrix single_body_action(const GateSequence &seq,
                                    const KernelOptions &options = {});

GateCounts gate_count(const GateSequence &seq);

enum class TransformKind { kFmft, kMftFold };

/// Gate sequence mapping site Fock states onto momentum-mode products.
/// kFmft requires N to be a power of two.
GateSequence momentum_transform(int n, TransformKind kind);

} // namespace fmft

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
 * @file fock.hpp
 * Fock-space conventions for spinless fermions on N <= 64 modes.
 *
 * An occupation mask stores site j (1-based) in bit j-1, so site 1 is the
 * least significant bit. The ket labelled by a mask is
 *
 *     (c+_1)^{n_1} (c+_2)^{n_2} ... (c+_N)^{n_N} |0>
 *
 * with creation operators in ascending site order. Every fermionic sign in
 * this library follows from that ordering.
 */

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fmft {

using Mask = std::uint64_t;
using Complex = std::complex<double>;

inline constexpr int kMaxSites = 64;

/// Bit for 1-based site.
constexpr Mask site_bit(int site) noexcept {
    return Mask{1} << static_cast<unsigned>(site - 1);
}

constexpr bool occupied(Mask mask, int site) noexcept {
    return (mask & site_bit(site)) != 0;
}

/// binomial(n, k) for 0 <= k <= n <= 64; exact in 64 bits.
std::uint64_t binomial(int n, int k);

/// Occupation pattern together with its site count.
struct OccupationState {
    Mask mask{0};
    int n{0};

    [[nodiscard]] int particles() const noexcept;
    /// Occupied sites, ascending, 1-based.
    [[nodiscard]] std::vector<int> sites() const;

    static OccupationState from_sites(int n, std::span<const int> sites);

    friend bool operator==(const OccupationState &,
                           const OccupationState &) = default;
};

/**
 * Fixed-(N, M) basis: all masks of popcount M in ascending numeric order.
 *
 * The ordinal of a mask is its combinatorial-number-system rank, which
 * coincides with the ascending order, so lookup needs no table.
 */
class SectorBasis {
  public:
    SectorBasis(int n, int m);

    [[nodiscard]] int sites() const noexcept { return n_; }
    [[nodiscard]] int particles() const noexcept { return m_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] std::span<const Mask> states() const noexcept {
        return states_;
    }
    [[nodiscard]] Mask state(std::size_t ordinal) const {
        return states_[ordinal];
    }
    /// Ordinal of a mask with the right popcount and no bits above N.
    /// Unchecked; use contains() first for untrusted input.
    [[nodiscard]] std::size_t index(Mask mask) const noexcept;
    [[nodiscard]] bool contains(Mask mask) const noexcept;

    friend bool operator==(const SectorBasis &a, const SectorBasis &b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

  private:
    int n_;
    int m_;
    std::vector<Mask> states_;
    // binomial(p, i) at [p * (m + 1) + i], p in 0..63, i in 1..m
    std::vector<std::uint64_t> rank_table_;
};

/// Largest sector this library will materialize.
inline constexpr std::uint64_t kMaxSectorDimension = std::uint64_t{1} << 31;

std::shared_ptr<const SectorBasis> enumerate_basis(int n, int m);

/// Complex amplitudes over a shared, immutable sector basis.
class StateVector {
  public:
    explicit StateVector(std::shared_ptr<const SectorBasis> basis);
    StateVector(std::shared_ptr<const SectorBasis> basis,
                std::vector<Complex> amplitudes);

    /// Unit amplitude on one basis state.
    static StateVector basis_state(std::shared_ptr<const SectorBasis> basis,
                                   Mask mask);

    [[nodiscard]] const SectorBasis &basis() const noexcept { return *basis_; }
    [[nodiscard]] const std::shared_ptr<const SectorBasis> &
    basis_ptr() const noexcept {
        return basis_;
    }
    [[nodiscard]] int sites() const noexcept { return basis_->sites(); }
    [[nodiscard]] std::size_t size() const noexcept { return amp_.size(); }

    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amp_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amp_;
    }
    Complex &operator[](std::size_t i) noexcept { return amp_[i]; }
    const Complex &operator[](std::size_t i) const noexcept { return amp_[i]; }

    /// Amplitude of a mask; zero if the mask is outside the sector.
    [[nodiscard]] Complex amplitude(Mask mask) const noexcept;

    [[nodiscard]] double norm() const noexcept;

  private:
    std::shared_ptr<const SectorBasis> basis_;
    std::vector<Complex> amp_;
};

/// (-1)^(occupied sites strictly between x and y), 1 <= x < y <= N.
int jw_string_sign(OccupationState state, int x, int y);

/// Unchecked kernel form of jw_string_sign.
inline int jw_sign_between(Mask mask, int x, int y) noexcept {
    const Mask between = (site_bit(y) - 1) & ~((site_bit(x) << 1) - 1);
    return (std::popcount(mask & between) & 1) ? -1 : 1;
}

/// Multiplies every amplitude with `site` occupied by e^{i phi}.
void apply_phase_gate(StateVector &v, int site, double phi);

/**
 * Two-site rotation between sites x < y.
 *
 * For each pair A (x occupied, y empty) and B (x empty, y occupied) with the
 * same remaining bits, with s the Jordan-Wigner sign between x and y,
 * c = cos(theta/2), t = sin(theta/2):
 *
 *     A' =  c A + s t B
 *     B' = -s t A + c B
 *
 * States with n_x == n_y are untouched.
 */
void apply_givens_gate(StateVector &v, int x, int y, double theta);

/// How apply_mode_permutation signs the relabelled state. kNone exists only
/// to exercise the oracle checks against a broken kernel.
enum class PermutationSign { kSortedParity, kNone };

/**
 * Relabels modes: site i -> perm[i-1] (perm holds 1-based images). The
 * amplitude picks up the parity of the sort of (perm(i_1), ..., perm(i_M)).
 */
void apply_mode_permutation(StateVector &v, std::span<const int> perm,
                            PermutationSign sign = PermutationSign::kSortedParity);

/// Translation by one site: occupied j -> j+1, with N wrapping to 1.
void translation_apply(StateVector &v);

/// Sum conj(u_i) v_i.
Complex inner_product(const StateVector &u, const StateVector &v);

/// Parity (+1 / -1) of the permutation that sorts `values` ascending.
/// Values must be distinct.
int sort_parity(std::span<const int> values);

/// Throws unless perm is a bijection on 1..n.
void validate_permutation(std::span<const int> perm, int n);

} // namespace fmft

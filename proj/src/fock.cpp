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

#include "fmft/fock.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fmft/error.hpp"

namespace fmft {

namespace {

__extension__ using Wide = unsigned __int128;

void check_site(int site, int n, const char *what) {
    if (site < 1 || site > n) {
        throw Error(Errc::InvalidArgument,
                    std::string(what) + ": site " + std::to_string(site) +
                        " outside 1.." + std::to_string(n));
    }
}

void check_pair(int x, int y, int n, const char *what) {
    check_site(x, n, what);
    check_site(y, n, what);
    if (x >= y) {
        throw Error(Errc::InvalidArgument,
                    std::string(what) + ": need x < y, got x=" +
                        std::to_string(x) + " y=" + std::to_string(y));
    }
}

Mask full_mask(int n) noexcept {
    return n == 64 ? ~Mask{0} : (Mask{1} << static_cast<unsigned>(n)) - 1;
}

} // namespace

std::uint64_t binomial(int n, int k) {
    require(n >= 0 && n <= 64 && k >= 0 && k <= n, Errc::InvalidArgument,
            "binomial: arguments out of range");
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step; use 128 bits to
        // dodge the intermediate overflow near n = 64.
        const auto wide = static_cast<Wide>(r) *
                          static_cast<unsigned>(n - k + i);
        r = static_cast<std::uint64_t>(wide / static_cast<unsigned>(i));
    }
    return r;
}

int OccupationState::particles() const noexcept { return std::popcount(mask); }

std::vector<int> OccupationState::sites() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(particles()));
    for (Mask m = mask; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
    }
    return out;
}

OccupationState OccupationState::from_sites(int n, std::span<const int> sites) {
    require(n >= 1 && n <= kMaxSites, Errc::InvalidArgument,
            "occupation: N must be in 1..64");
    OccupationState s{0, n};
    for (int site : sites) {
        check_site(site, n, "occupation");
        require(!occupied(s.mask, site), Errc::InvalidArgument,
                "occupation: site " + std::to_string(site) + " listed twice");
        s.mask |= site_bit(site);
    }
    return s;
}

SectorBasis::SectorBasis(int n, int m) : n_(n), m_(m) {
    require(n >= 1 && n <= kMaxSites, Errc::InvalidArgument,
            "basis: N=" + std::to_string(n) + " outside 1..64");
    require(m >= 0 && m <= n, Errc::InvalidArgument,
            "basis: M=" + std::to_string(m) + " outside 0.." +
                std::to_string(n));
    const std::uint64_t dim = binomial(n, m);
    require(dim <= kMaxSectorDimension, Errc::InvalidArgument,
            "basis: dimension binomial(" + std::to_string(n) + "," +
                std::to_string(m) + ") too large to materialize");

    rank_table_.assign(static_cast<std::size_t>(64 * (m + 1)), 0);
    for (int p = 0; p < 64; ++p) {
        for (int i = 1; i <= m; ++i) {
            rank_table_[static_cast<std::size_t>(p * (m + 1) + i)] =
                i <= p ? binomial(p, i) : 0;
        }
    }

    states_.reserve(dim);
    if (m == 0) {
        states_.push_back(0);
        return;
    }
    // Gosper's hack walks masks of fixed popcount in ascending order.
    Mask v = (m == 64) ? ~Mask{0} : (Mask{1} << static_cast<unsigned>(m)) - 1;
    for (std::uint64_t c = 0; c < dim; ++c) {
        states_.push_back(v);
        if (c + 1 == dim) {
            break;
        }
        const Mask t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

std::size_t SectorBasis::index(Mask mask) const noexcept {
    std::uint64_t r = 0;
    int i = 1;
    for (Mask b = mask; b != 0; b &= b - 1, ++i) {
        r += rank_table_[static_cast<std::size_t>(std::countr_zero(b) *
                                                  (m_ + 1) +
                                                  i)];
    }
    return static_cast<std::size_t>(r);
}

bool SectorBasis::contains(Mask mask) const noexcept {
    return std::popcount(mask) == m_ && (mask & ~full_mask(n_)) == 0;
}

std::shared_ptr<const SectorBasis> enumerate_basis(int n, int m) {
    return std::make_shared<const SectorBasis>(n, m);
}

StateVector::StateVector(std::shared_ptr<const SectorBasis> basis)
    : basis_(std::move(basis)), amp_(basis_->size()) {}

StateVector::StateVector(std::shared_ptr<const SectorBasis> basis,
                         std::vector<Complex> amplitudes)
    : basis_(std::move(basis)), amp_(std::move(amplitudes)) {
    require(amp_.size() == basis_->size(), Errc::InvalidArgument,
            "state: amplitude count does not match basis dimension");
}

StateVector StateVector::basis_state(std::shared_ptr<const SectorBasis> basis,
                                     Mask mask) {
    require(basis->contains(mask), Errc::InvalidArgument,
            "state: mask not in sector");
    StateVector v(std::move(basis));
    v.amp_[v.basis_->index(mask)] = 1.0;
    return v;
}

Complex StateVector::amplitude(Mask mask) const noexcept {
    if (!basis_->contains(mask)) {
        return 0.0;
    }
    return amp_[basis_->index(mask)];
}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const auto &a : amp_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

int jw_string_sign(OccupationState state, int x, int y) {
    check_pair(x, y, state.n, "jw_string_sign");
    return jw_sign_between(state.mask, x, y);
}

void apply_phase_gate(StateVector &v, int site, double phi) {
    check_site(site, v.sites(), "phase gate");
    const Complex factor = std::polar(1.0, phi);
    const Mask bit = site_bit(site);
    const auto states = v.basis().states();
    auto amp = v.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (states[i] & bit) {
            amp[i] *= factor;
        }
    }
}

void apply_givens_gate(StateVector &v, int x, int y, double theta) {
    check_pair(x, y, v.sites(), "givens gate");
    const double c = std::cos(0.5 * theta);
    const double t = std::sin(0.5 * theta);
    const Mask bx = site_bit(x);
    const Mask by = site_bit(y);
    const SectorBasis &basis = v.basis();
    const auto states = basis.states();
    auto amp = v.amplitudes();
    for (std::size_t a = 0; a < amp.size(); ++a) {
        const Mask s = states[a];
        if ((s & bx) == 0 || (s & by) != 0) {
            continue;
        }
        const std::size_t b = basis.index(s ^ bx ^ by);
        const double st = jw_sign_between(s, x, y) * t;
        const Complex amp_a = amp[a];
        const Complex amp_b = amp[b];
        amp[a] = c * amp_a + st * amp_b;
        amp[b] = -st * amp_a + c * amp_b;
    }
}

int sort_parity(std::span<const int> values) {
    int inversions = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            inversions += values[i] > values[j];
        }
    }
    return (inversions & 1) ? -1 : 1;
}

void validate_permutation(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n) {
        throw Error(Errc::InvalidArgument,
                    "permutation: expected " + std::to_string(n) +
                        " entries, got " + std::to_string(perm.size()));
    }
    Mask seen = 0;
    for (int image : perm) {
        if (image < 1 || image > n) {
            throw Error(Errc::InvalidArgument,
                        "permutation: image " + std::to_string(image) +
                            " outside 1.." + std::to_string(n));
        }
        if (occupied(seen, image)) {
            throw Error(Errc::InvalidArgument,
                        "permutation: image " + std::to_string(image) +
                            " repeated, not a bijection");
        }
        seen |= site_bit(image);
    }
}

void apply_mode_permutation(StateVector &v, std::span<const int> perm,
                            PermutationSign sign) {
    const int n = v.sites();
    validate_permutation(perm, n);
    const SectorBasis &basis = v.basis();
    const auto states = basis.states();
    const auto amp = v.amplitudes();
    std::vector<Complex> out(amp.size());
    std::array<int, kMaxSites> images{};
    for (std::size_t i = 0; i < amp.size(); ++i) {
        Mask target = 0;
        std::size_t count = 0;
        for (Mask b = states[i]; b != 0; b &= b - 1) {
            const int image = perm[static_cast<std::size_t>(std::countr_zero(b))];
            images[count++] = image;
            target |= site_bit(image);
        }
        const int parity = sign == PermutationSign::kSortedParity
                               ? sort_parity({images.data(), count})
                               : 1;
        out[basis.index(target)] = static_cast<double>(parity) * amp[i];
    }
    v = StateVector(v.basis_ptr(), std::move(out));
}

void translation_apply(StateVector &v) {
    const int n = v.sites();
    const SectorBasis &basis = v.basis();
    const auto states = basis.states();
    const auto amp = v.amplitudes();
    const Mask top = site_bit(n);
    // Moving c+_1 from the back of the list to the front passes M-1 others.
    const double wrap_sign = (basis.particles() % 2 == 0) ? -1.0 : 1.0;
    std::vector<Complex> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        const Mask s = states[i];
        if (s & top) {
            out[basis.index(((s & ~top) << 1) | 1)] = wrap_sign * amp[i];
        } else {
            out[basis.index(s << 1)] = amp[i];
        }
    }
    v = StateVector(v.basis_ptr(), std::move(out));
}

Complex inner_product(const StateVector &u, const StateVector &v) {
    require(u.basis() == v.basis(), Errc::InvalidArgument,
            "inner product: basis mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

} // namespace fmft

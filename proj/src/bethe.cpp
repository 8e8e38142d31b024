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

#include "fmft/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fmft/error.hpp"
#include "parallel.hpp"

namespace fmft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mask ring_mask(int n) noexcept {
    return n == 64 ? ~Mask{0} : (Mask{1} << static_cast<unsigned>(n)) - 1;
}

int momentum_index_of(Mask mask, int n) noexcept {
    int q = 0;
    for (Mask b = mask; b != 0; b &= b - 1) {
        q += std::countr_zero(b);
    }
    return q % n;
}

double max_antihermitian(const Eigen::MatrixXcd &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace

void ChainParams::validate() const {
    require(n >= 3 && n <= kMaxSites, Errc::InvalidArgument,
            "chain: N=" + std::to_string(n) + " outside 3..64");
    require(m >= 0 && m <= n, Errc::InvalidArgument,
            "chain: M=" + std::to_string(m) + " outside 0.." +
                std::to_string(n));
    require(std::isfinite(hopping) && std::isfinite(interaction),
            Errc::InvalidArgument, "chain: J and U must be finite");
}

ModeSet ModeSet::from_modes(int n, std::span<const int> modes) {
    require(n >= 1 && n <= kMaxSites, Errc::InvalidArgument,
            "mode set: N outside 1..64");
    ModeSet ms{n, 0};
    int previous = 0;
    for (int j : modes) {
        require(j > previous && j <= n, Errc::InvalidArgument,
                "mode set: modes must be strictly ascending within 1.." +
                    std::to_string(n));
        ms.mask |= site_bit(j);
        previous = j;
    }
    return ms;
}

std::vector<int> ModeSet::modes() const {
    return OccupationState{mask, n}.sites();
}

int ModeSet::momentum_index() const noexcept {
    return momentum_index_of(mask, n);
}

double quasimomentum(int q, int n) {
    return kTwoPi * static_cast<double>(q) / static_cast<double>(n);
}

double band_axis(int q, int n) {
    double K = quasimomentum(q, n) - std::numbers::pi;
    if (K < 0.0) {
        K += kTwoPi;
    }
    return K >= kTwoPi ? K - kTwoPi : K;
}

int occupied_bonds(Mask mask, int n) noexcept {
    const Mask full = ring_mask(n);
    const Mask s = mask & full;
    // Bit j-1 of `next` holds n_{j+1}.
    const Mask next =
        ((s >> 1) | (s << static_cast<unsigned>(n - 1))) & full;
    return std::popcount(s & next);
}

double interaction_energy(OccupationState state, const ChainParams &params) {
    return params.interaction * occupied_bonds(state.mask, state.n);
}

double hopping_energy(const ModeSet &modes, const ChainParams &params) {
    double e = 0.0;
    for (int j : modes.modes()) {
        e += -2.0 * params.hopping *
             std::cos(kTwoPi * (j - 1) / static_cast<double>(modes.n));
    }
    return e;
}

std::vector<MomentumSector> sector_partition(const ChainParams &params) {
    params.validate();
    const int n = params.n;
    std::vector<MomentumSector> sectors(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        auto &s = sectors[static_cast<std::size_t>(q)];
        s.q = q;
        s.k = quasimomentum(q, n);
        s.K = band_axis(q, n);
    }
    const auto basis = enumerate_basis(n, params.m);
    for (Mask mask : basis->states()) {
        const ModeSet ms{n, mask};
        sectors[static_cast<std::size_t>(ms.momentum_index())].basis.push_back(
            ms);
    }
    return sectors;
}

MomentumTransform::MomentumTransform(GateSequence seq)
    : forward(std::move(seq)), inverse(invert_sequence(forward)) {
    forward.validate();
}

MomentumTransform MomentumTransform::make(int n, TransformKind kind) {
    return MomentumTransform(momentum_transform(n, kind));
}

MomentumTransform MomentumTransform::automatic(int n) {
    return make(n, is_power_of_two(n) && n >= 2 ? TransformKind::kFmft
                                                : TransformKind::kMftFold);
}

StateVector momentum_state(const ModeSet &modes, const GateSequence &transform,
                           const KernelOptions &options) {
    require(modes.n == transform.n, Errc::InvalidArgument,
            "momentum state: mode set and transform disagree on N");
    auto basis = enumerate_basis(modes.n, modes.size());
    return apply_sequence(StateVector::basis_state(basis, modes.mask),
                          transform, options);
}

StateVector slater_oracle(const ModeSet &modes) {
    const int n = modes.n;
    const int m = modes.size();
    auto basis = enumerate_basis(n, m);
    StateVector out(basis);
    const std::vector<int> js = modes.modes();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXcd a(m, m);
    for (std::size_t idx = 0; idx < basis->size(); ++idx) {
        const std::vector<int> sites =
            OccupationState{basis->state(idx), n}.sites();
        for (int i = 0; i < m; ++i) {
            for (int c = 0; c < m; ++c) {
                const long e = static_cast<long>(js[static_cast<std::size_t>(i)] - 1) *
                               (sites[static_cast<std::size_t>(c)] - 1) % n;
                a(i, c) = std::polar(scale, -kTwoPi * static_cast<double>(e) / n);
            }
        }
        out[idx] = m == 0 ? Complex(1.0) : a.determinant();
    }
    return out;
}

SectorMatrix build_sector_matrix(const MomentumSector &sector,
                                 const ChainParams &params,
                                 const MomentumTransform &transform,
                                 const BuildOptions &options) {
    params.validate();
    require(transform.forward.n == params.n, Errc::InvalidArgument,
            "sector build: transform N does not match chain N");
    const auto dim = static_cast<Eigen::Index>(sector.basis.size());
    SectorMatrix out;
    out.interaction = Eigen::MatrixXcd::Zero(dim, dim);

    if (params.interaction != 0.0 && dim > 0) {
        const auto basis = enumerate_basis(params.n, params.m);
        const auto states = basis->states();
        std::vector<double> site_energy(states.size());
        std::vector<char> in_sector(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) {
            site_energy[i] =
                params.interaction * occupied_bonds(states[i], params.n);
            in_sector[i] = momentum_index_of(states[i], params.n) == sector.q;
        }
        std::vector<double> leakage(static_cast<std::size_t>(dim), 0.0);

        detail::parallel_for(
            static_cast<std::size_t>(dim), options.threads,
            [&](std::size_t col) {
                StateVector v = apply_sequence(
                    StateVector::basis_state(basis, sector.basis[col].mask),
                    transform.forward);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    v[i] *= site_energy[i];
                }
                const double col_norm = v.norm();
                v = apply_sequence(std::move(v), transform.inverse);
                double outside = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (!in_sector[i]) {
                        outside += std::norm(v[i]);
                    }
                }
                leakage[col] =
                    col_norm > 0.0 ? std::sqrt(outside) / col_norm : 0.0;
                for (Eigen::Index row = 0; row < dim; ++row) {
                    out.interaction(row, static_cast<Eigen::Index>(col)) =
                        v[basis->index(
                            sector.basis[static_cast<std::size_t>(row)].mask)];
                }
            });
        out.leakage = *std::max_element(leakage.begin(), leakage.end());
        require(out.leakage <= options.leakage_tolerance, Errc::SectorLeakage,
                "sector build: q=" + std::to_string(sector.q) +
                    " leaks weight " + std::to_string(out.leakage) +
                    " outside its momentum sector");
    }

    out.hamiltonian = out.interaction;
    for (Eigen::Index i = 0; i < dim; ++i) {
        out.hamiltonian(i, i) +=
            hopping_energy(sector.basis[static_cast<std::size_t>(i)], params);
    }
    out.hermiticity_defect = dim > 0 ? max_antihermitian(out.hamiltonian) : 0.0;
    require(out.hermiticity_defect <= options.hermitian_tolerance,
            Errc::NotHermitian,
            "sector build: q=" + std::to_string(sector.q) +
                " block is not Hermitian (defect " +
                std::to_string(out.hermiticity_defect) + ")");
    return out;
}

SectorSpectrum diagonalize_sector(const Eigen::MatrixXcd &matrix,
                                  bool want_vectors,
                                  double hermitian_tolerance) {
    require(matrix.rows() == matrix.cols(), Errc::InvalidArgument,
            "diagonalize: matrix must be square");
    SectorSpectrum out;
    if (matrix.rows() == 0) {
        return out;
    }
    const double defect = max_antihermitian(matrix);
    require(defect <= hermitian_tolerance, Errc::NotHermitian,
            "diagonalize: matrix is not Hermitian (defect " +
                std::to_string(defect) + ")");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        matrix, want_vectors ? Eigen::ComputeEigenvectors
                             : Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, Errc::Numerical,
            "diagonalize: eigensolver did not converge");
    const Eigen::VectorXd &ev = solver.eigenvalues();
    out.values.assign(ev.data(), ev.data() + ev.size());
    if (want_vectors) {
        out.vectors = solver.eigenvectors();
        const double bound = 1e-9 * matrix.norm();
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            const double residual =
                (matrix * out.vectors.col(i) - ev(i) * out.vectors.col(i))
                    .norm();
            require(residual <= bound, Errc::Numerical,
                    "diagonalize: eigenpair residual " +
                        std::to_string(residual) + " too large");
        }
    }
    return out;
}

std::size_t BandDiagram::total() const noexcept {
    std::size_t t = 0;
    for (const auto &e : entries) {
        t += e.energies.size();
    }
    return t;
}

std::vector<double> BandDiagram::all_energies() const {
    std::vector<double> all;
    all.reserve(total());
    for (const auto &e : entries) {
        all.insert(all.end(), e.energies.begin(), e.energies.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

BandDiagram assemble_band_diagram(const ChainParams &params,
                                  const MomentumTransform &transform,
                                  const BuildOptions &options) {
    BandDiagram diagram;
    diagram.params = params;
    for (const MomentumSector &sector : sector_partition(params)) {
        BandEntry entry{sector.q, sector.k, sector.K, {}, {}};
        if (!sector.basis.empty()) {
            const SectorMatrix block =
                build_sector_matrix(sector, params, transform, options);
            diagram.max_leakage = std::max(diagram.max_leakage, block.leakage);
            SectorSpectrum spectrum = diagonalize_sector(
                block.hamiltonian, true, options.hermitian_tolerance);
            entry.energies = std::move(spectrum.values);
            for (Eigen::Index i = 0; i < spectrum.vectors.cols(); ++i) {
                const auto v = spectrum.vectors.col(i);
                entry.interaction_average.push_back(
                    v.dot(block.interaction * v).real());
            }
        }
        diagram.entries.push_back(std::move(entry));
    }
    return diagram;
}

BandDiagram assemble_band_diagram(const ChainParams &params,
                                  const BuildOptions &options) {
    params.validate();
    return assemble_band_diagram(
        params, MomentumTransform::automatic(params.n), options);
}

std::vector<Cluster> find_clusters(std::span<const double> sorted_energies,
                                   const ChainParams &params) {
    std::vector<Cluster> clusters;
    if (sorted_energies.empty()) {
        return clusters;
    }
    const double j = std::abs(params.hopping);
    const bool split = params.interaction >= 10.0 * j;
    const double gap = std::max(params.interaction / 2.0, 10.0 * j);

    double sum = 0.0;
    Cluster current{sorted_energies.front(), sorted_energies.front(), 0.0, 0};
    auto close = [&] {
        current.mean = sum / static_cast<double>(current.count);
        clusters.push_back(current);
    };
    for (std::size_t i = 0; i < sorted_energies.size(); ++i) {
        const double e = sorted_energies[i];
        if (split && i > 0 && e - sorted_energies[i - 1] > gap) {
            close();
            current = Cluster{e, e, 0.0, 0};
            sum = 0.0;
        }
        current.hi = e;
        ++current.count;
        sum += e;
    }
    close();
    return clusters;
}

std::vector<int> cluster_labels(std::span<const double> sorted_energies,
                                std::span<const Cluster> clusters) {
    std::vector<int> labels(sorted_energies.size(), 0);
    std::size_t c = 0;
    for (std::size_t i = 0; i < sorted_energies.size(); ++i) {
        while (c + 1 < clusters.size() && sorted_energies[i] > clusters[c].hi) {
            ++c;
        }
        labels[i] = static_cast<int>(c);
    }
    return labels;
}

double estimate_build_ops(const ChainParams &params,
                          const GateSequence &transform) {
    params.validate();
    const auto dim = static_cast<double>(binomial(params.n, params.m));
    return 2.0 * static_cast<double>(transform.gates.size()) * dim * dim;
}

Eigen::MatrixXd full_ed_hamiltonian(const ChainParams &params,
                                    std::uint64_t cap) {
    params.validate();
    const std::uint64_t dim = binomial(params.n, params.m);
    require(dim <= cap, Errc::CapExceeded,
            "full ED: dimension " + std::to_string(dim) + " exceeds cap " +
                std::to_string(cap));
    const auto basis = enumerate_basis(params.n, params.m);
    const int n = params.n;
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        const Mask s = basis->state(static_cast<std::size_t>(col));
        h(col, col) = params.interaction * occupied_bonds(s, n);
        for (int j = 1; j <= n; ++j) {
            // Bond (j, j+1) with j+1 wrapping to 1; order the pair as x < y.
            const int a = j;
            const int b = j == n ? 1 : j + 1;
            const int x = std::min(a, b);
            const int y = std::max(a, b);
            const bool nx = occupied(s, x);
            const bool ny = occupied(s, y);
            if (nx == ny) {
                continue;
            }
            // c+_x c_y and c+_y c_x both pick up the string between x and y.
            const Mask t = s ^ site_bit(x) ^ site_bit(y);
            const auto row = static_cast<Eigen::Index>(basis->index(t));
            h(row, col) += -params.hopping * jw_sign_between(s, x, y);
        }
    }
    return h;
}

FullSpectrum full_ed_oracle(const ChainParams &params, std::uint64_t cap,
                            bool want_vectors) {
    const Eigen::MatrixXd h = full_ed_hamiltonian(params, cap);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, Errc::Numerical,
            "full ED: eigensolver did not converge");
    FullSpectrum out;
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + solver.eigenvalues().size());
    if (want_vectors) {
        out.vectors = solver.eigenvectors();
    }
    return out;
}

} // namespace fmft

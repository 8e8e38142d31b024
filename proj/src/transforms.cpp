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

#include "fmft/transforms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fmft/error.hpp"

namespace fmft {

namespace {

// Coefficients below this are treated as already folded.
constexpr double kFoldZero = 1e-14;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void check_site_count(int n) {
    if (n < 1 || n > kMaxModes) {
        throw Error(Errc::InvalidArgument,
                    "transform: N=" + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxModes));
    }
}

void check_image_list(const std::vector<int> &perm, int n) {
    if (n <= kMaxSites) {
        validate_permutation(perm, n);
        return;
    }
    require(static_cast<int>(perm.size()) == n, Errc::InvalidArgument,
            "permutation: expected " + std::to_string(n) + " entries");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int image : perm) {
        require(image >= 1 && image <= n &&
                    !seen[static_cast<std::size_t>(image - 1)],
                Errc::InvalidArgument,
                "permutation: image " + std::to_string(image) +
                    " out of range or repeated");
        seen[static_cast<std::size_t>(image - 1)] = 1;
    }
}

int bit_reverse(int value, int bits) {
    int r = 0;
    for (int b = 0; b < bits; ++b) {
        r = (r << 1) | ((value >> b) & 1);
    }
    return r;
}

} // namespace

bool is_power_of_two(int n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

void GateSequence::validate() const {
    check_site_count(n);
    auto site_ok = [this](int s) { return s >= 1 && s <= n; };
    for (const Gate &g : gates) {
        std::visit(
            overloaded{
                [&](const PhaseGate &p) {
                    require(site_ok(p.site), Errc::InvalidArgument,
                            "gate list: phase site " + std::to_string(p.site) +
                                " outside 1.." + std::to_string(n));
                },
                [&](const GivensGate &q) {
                    require(site_ok(q.x) && site_ok(q.y) && q.x < q.y,
                            Errc::InvalidArgument,
                            "gate list: givens pair (" + std::to_string(q.x) +
                                "," + std::to_string(q.y) +
                                ") needs 1 <= x < y <= " + std::to_string(n));
                },
                [&](const PermuteGate &p) { check_image_list(p.perm, n); },
            },
            g);
    }
}

SingleBodyMatrix dft_matrix(int n) {
    check_site_count(n);
    SingleBodyMatrix d(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            // Reduce the exponent first so large N keeps full accuracy.
            const int e = (j * k) % n;
            d(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / n);
        }
    }
    return d;
}

SingleBodyMatrix momentum_action(int n) { return dft_matrix(n).adjoint(); }

double unitarity_defect(const SingleBodyMatrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const SingleBodyMatrix e =
        u * u.adjoint() - SingleBodyMatrix::Identity(u.rows(), u.cols());
    return e.cwiseAbs().maxCoeff();
}

GateSequence fmft_sequence(int n, FmftVariant variant) {
    check_site_count(n);
    require(n >= 2 && is_power_of_two(n), Errc::InvalidArgument,
            "fmft: N=" + std::to_string(n) +
                " is not a power of two >= 2; use the mft-dft folding "
                "compiler instead");
    const int p = std::countr_zero(static_cast<unsigned>(n));
    const double sign = variant == FmftVariant::kForward ? 1.0 : -1.0;

    GateSequence seq{n, {}};
    seq.gates.reserve(static_cast<std::size_t>(n * p + 1));
    for (int l = p; l >= 1; --l) {
        const int half = 1 << (l - 1);
        const int blocks = n >> l;
        for (int j = 1; j <= blocks; ++j) {
            for (int k = 0; k < half; ++k) {
                const int x = 1 + k + (j - 1) * (half << 1);
                const int y = x + half;
                const double phi =
                    sign * std::numbers::pi *
                    (1.0 - static_cast<double>(k) / static_cast<double>(half));
                seq.gates.emplace_back(
                    GivensGate{x, y, std::numbers::pi / 2});
                seq.gates.emplace_back(PhaseGate{y, phi});
            }
        }
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        perm[static_cast<std::size_t>(i)] = bit_reverse(i, p) + 1;
    }
    seq.gates.emplace_back(PermuteGate{std::move(perm)});
    return seq;
}

GateSequence invert_sequence(const GateSequence &seq) {
    GateSequence inv{seq.n, {}};
    inv.gates.reserve(seq.gates.size());
    for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it) {
        inv.gates.push_back(std::visit(
            overloaded{
                [](const PhaseGate &p) -> Gate {
                    return PhaseGate{p.site, -p.phi};
                },
                [](const GivensGate &g) -> Gate {
                    return GivensGate{g.x, g.y, -g.theta};
                },
                [](const PermuteGate &p) -> Gate {
                    std::vector<int> back(p.perm.size());
                    for (std::size_t i = 0; i < p.perm.size(); ++i) {
                        back[static_cast<std::size_t>(p.perm[i] - 1)] =
                            static_cast<int>(i) + 1;
                    }
                    return PermuteGate{std::move(back)};
                },
            },
            *it));
    }
    return inv;
}

StateVector apply_sequence(StateVector v, const GateSequence &seq,
                           const KernelOptions &options) {
    if (v.sites() != seq.n) {
        throw Error(Errc::InvalidArgument,
                    "apply: state has N=" + std::to_string(v.sites()) +
                        " but gate list has N=" + std::to_string(seq.n));
    }
    const double givens_sign = options.flip_givens_sign ? -1.0 : 1.0;
    for (const Gate &g : seq.gates) {
        std::visit(overloaded{
                       [&](const PhaseGate &p) {
                           apply_phase_gate(v, p.site, p.phi);
                       },
                       [&](const GivensGate &q) {
                           apply_givens_gate(v, q.x, q.y, givens_sign * q.theta);
                       },
                       [&](const PermuteGate &p) {
                           apply_mode_permutation(v, p.perm,
                                                  options.permutation_sign);
                       },
                   },
                   g);
    }
    return v;
}

GateSequence mft_fold_compile(const SingleBodyMatrix &target) {
    const auto n = static_cast<int>(target.rows());
    require(target.rows() == target.cols(), Errc::InvalidArgument,
            "fold: target must be square");
    check_site_count(n);
    const double defect = unitarity_defect(target);
    require(defect <= kUnitarityTolerance, Errc::NotUnitary,
            "fold: target is not unitary (defect " + std::to_string(defect) +
                ")");

    // Reduce t to the identity by right-multiplying single-body gate
    // matrices R_1, R_2, ...; then target = ... R_2^-1 R_1^-1, so emitting
    // R_i^-1 in reduction order gives the ket-side sequence.
    SingleBodyMatrix t = target;
    GateSequence seq{n, {}};

    auto dephase = [&](int r, int col) {
        const Complex z = t(r, col);
        if (std::abs(z) <= kFoldZero) {
            return;
        }
        const double phi = std::arg(z);
        if (phi == 0.0) {
            return;
        }
        t.col(col) *= std::polar(1.0, -phi);
        t(r, col) = std::abs(z);
        seq.gates.emplace_back(PhaseGate{col + 1, phi});
    };

    for (int r = 0; r < n - 1; ++r) {
        for (int col = r; col < n; ++col) {
            dephase(r, col);
        }
        for (int m = n - 2; m >= r; --m) {
            const double a = t(r, m).real();
            const double b = t(r, m + 1).real();
            if (std::abs(b) <= kFoldZero) {
                t(r, m + 1) = 0.0;
                continue;
            }
            const double theta =
                std::abs(a) <= kFoldZero ? std::numbers::pi
                                         : 2.0 * std::atan2(-b, a);
            const double c = std::cos(0.5 * theta);
            const double s = std::sin(0.5 * theta);
            const Eigen::VectorXcd left = t.col(m);
            const Eigen::VectorXcd right = t.col(m + 1);
            t.col(m) = c * left - s * right;
            t.col(m + 1) = s * left + c * right;
            t(r, m + 1) = 0.0;
            t(r, m) = Complex(t(r, m).real(), 0.0);
            seq.gates.emplace_back(GivensGate{m + 1, m + 2, -theta});
        }
    }
    for (int r = 0; r < n; ++r) {
        dephase(r, r);
    }
    return seq;
}

SingleBodyMatrix single_body_action(const GateSequence &seq,
                                    const KernelOptions &options) {
    seq.validate();
    // One particle never has a string between x and y, so the gates act on
    // rows of the coefficient matrix exactly as the sector kernels do.
    const double givens_sign = options.flip_givens_sign ? -1.0 : 1.0;
    SingleBodyMatrix u = SingleBodyMatrix::Identity(seq.n, seq.n);
    for (const Gate &g : seq.gates) {
        std::visit(
            overloaded{
                [&](const PhaseGate &p) {
                    u.row(p.site - 1) *= std::polar(1.0, p.phi);
                },
                [&](const GivensGate &q) {
                    const double half = 0.5 * givens_sign * q.theta;
                    const double c = std::cos(half);
                    const double t = std::sin(half);
                    const Eigen::RowVectorXcd rx = u.row(q.x - 1);
                    const Eigen::RowVectorXcd ry = u.row(q.y - 1);
                    u.row(q.x - 1) = c * rx + t * ry;
                    u.row(q.y - 1) = -t * rx + c * ry;
                },
                [&](const PermuteGate &p) {
                    SingleBodyMatrix out(u.rows(), u.cols());
                    for (std::size_t i = 0; i < p.perm.size(); ++i) {
                        out.row(p.perm[i] - 1) = u.row(static_cast<Eigen::Index>(i));
                    }
                    u = std::move(out);
                },
            },
            g);
    }
    return u;
}

GateCounts gate_count(const GateSequence &seq) {
    GateCounts c;
    for (const Gate &g : seq.gates) {
        std::visit(overloaded{
                       [&](const PhaseGate &) { ++c.phase; },
                       [&](const GivensGate &) { ++c.givens; },
                       [&](const PermuteGate &) { ++c.permute; },
                   },
                   g);
    }
    return c;
}

GateSequence momentum_transform(int n, TransformKind kind) {
    if (kind == TransformKind::kFmft) {
        return fmft_sequence(n);
    }
    return mft_fold_compile(momentum_action(n));
}

} // namespace fmft

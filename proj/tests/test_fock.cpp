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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fmft/error.hpp"
#include "fmft/fock.hpp"

#include "TestHelpers.hpp"

using namespace fmft;
using namespace fmft::test;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("enumerate_basis orders masks and inverts them", "[fock]") {
    SECTION("N=2 M=1") {
        const auto b = enumerate_basis(2, 1);
        REQUIRE(b->size() == 2);
        CHECK(b->state(0) == 1);
        CHECK(b->state(1) == 2);
    }
    SECTION("sizes") {
        CHECK(enumerate_basis(4, 2)->size() == 6);
        // binomial(16, 4), computed independently
        CHECK(enumerate_basis(16, 4)->size() == 1820);
        CHECK(enumerate_basis(64, 1)->size() == 64);
        CHECK(enumerate_basis(64, 64)->size() == 1);
        CHECK(enumerate_basis(5, 0)->state(0) == 0);
    }
    SECTION("ascending, fixed popcount, index inverts") {
        for (int n : {1, 3, 7, 12, 64}) {
            for (int m : {0, 1, 2, 3, n}) {
                if (m > n || (n == 64 && m == 3)) {
                    continue;
                }
                const auto b = enumerate_basis(n, m);
                CHECK(b->size() == binomial(n, m));
                for (std::size_t i = 0; i < b->size(); ++i) {
                    CHECK(std::popcount(b->state(i)) == m);
                    CHECK(b->index(b->state(i)) == i);
                    if (i > 0) {
                        CHECK(b->state(i - 1) < b->state(i));
                    }
                }
            }
        }
    }
    SECTION("invalid N, M rejected") {
        CHECK_THROWS_AS(enumerate_basis(0, 0), Error);
        CHECK_THROWS_AS(enumerate_basis(65, 1), Error);
        CHECK_THROWS_AS(enumerate_basis(4, 5), Error);
        CHECK_THROWS_AS(enumerate_basis(4, -1), Error);
        CHECK_THROWS_AS(enumerate_basis(64, 32), Error);
    }
}

TEST_CASE("jw_string_sign counts occupied interior sites", "[fock]") {
    const OccupationState s23{sites_mask({2, 3}), 4};
    CHECK(jw_string_sign(s23, 1, 3) == -1);
    CHECK(jw_string_sign({sites_mask({1, 4}), 4}, 1, 4) == 1);
    CHECK(jw_string_sign(s23, 2, 3) == 1);
    CHECK_THROWS_AS(jw_string_sign(s23, 3, 3), Error);
    CHECK_THROWS_AS(jw_string_sign(s23, 3, 1), Error);

    // c+_1 c_3 |{2,3}> = -|{1,2}> from the operator algebra.
    FockVector ket = FockVector::Zero(16);
    ket(static_cast<Eigen::Index>(sites_mask({2, 3}))) = 1.0;
    const FockVector hopped = creation(4, 1) * annihilation(4, 3) * ket;
    CHECK_THAT(hopped(static_cast<Eigen::Index>(sites_mask({1, 2}))).real(),
               WithinAbs(-1.0, 1e-15));
}

TEST_CASE("phase gate", "[fock]") {
    auto b1 = enumerate_basis(2, 1);
    auto v = StateVector::basis_state(b1, sites_mask({2}));
    apply_phase_gate(v, 2, kPi / 2);
    CHECK(std::abs(v.amplitude(sites_mask({2})) - Complex(0, 1)) < 1e-15);

    auto w = StateVector::basis_state(b1, sites_mask({1}));
    apply_phase_gate(w, 2, 0.731);
    CHECK(w.amplitude(sites_mask({1})) == Complex(1.0));

    auto both = StateVector::basis_state(enumerate_basis(2, 2), 3);
    apply_phase_gate(both, 2, kPi);
    CHECK(std::abs(both[0] + 1.0) < 1e-15);

    CHECK_THROWS_AS(apply_phase_gate(v, 3, 1.0), Error);
    CHECK_THROWS_AS(apply_phase_gate(v, 0, 1.0), Error);
}

TEST_CASE("givens gate", "[fock]") {
    SECTION("N=2 single particle") {
        auto v = StateVector::basis_state(enumerate_basis(2, 1), sites_mask({1}));
        apply_givens_gate(v, 1, 2, kPi / 2);
        CHECK_THAT(v.amplitude(sites_mask({1})).real(), WithinAbs(kInvSqrt2, 1e-15));
        CHECK_THAT(v.amplitude(sites_mask({2})).real(), WithinAbs(-kInvSqrt2, 1e-15));
    }
    SECTION("doubly occupied pair is untouched") {
        auto v = StateVector::basis_state(enumerate_basis(2, 2), 3);
        apply_givens_gate(v, 1, 2, 1.234);
        CHECK(v[0] == Complex(1.0));
    }
    SECTION("distant pair picks up the string sign") {
        // |{2,3}> is the B member of the (1,3) pair with partner A = |{1,2}>
        // and s = -1; at theta = pi, A' = s t B = -1.
        auto v = StateVector::basis_state(enumerate_basis(4, 2), sites_mask({2, 3}));
        apply_givens_gate(v, 1, 3, kPi);
        CHECK_THAT(v.amplitude(sites_mask({1, 2})).real(), WithinAbs(-1.0, 1e-15));
        CHECK(std::abs(v.amplitude(sites_mask({2, 3}))) < 1e-15);
    }
    SECTION("x >= y rejected") {
        auto v = StateVector::basis_state(enumerate_basis(3, 1), 1);
        CHECK_THROWS_AS(apply_givens_gate(v, 2, 2, 0.1), Error);
        CHECK_THROWS_AS(apply_givens_gate(v, 3, 1, 0.1), Error);
        CHECK_THROWS_AS(apply_givens_gate(v, 1, 4, 0.1), Error);
    }
    SECTION("matches exp(+theta/2 (c+_x c_y - c+_y c_x)) on every pair") {
        std::mt19937_64 rng(7);
        const int n = 5;
        for (int m = 0; m <= n; ++m) {
            const auto basis = enumerate_basis(n, m);
            for (int x = 1; x <= n; ++x) {
                for (int y = x + 1; y <= n; ++y) {
                    const double theta = 0.3 + 0.4 * x - 0.17 * y;
                    const StateVector v = random_state(basis, rng);
                    StateVector w = v;
                    apply_givens_gate(w, x, y, theta);
                    const FockVector expected =
                        pair_rotation(n, x, y, theta / 2) * embed(v);
                    CHECK(max_abs_diff(embed(w), expected) < 1e-12);
                }
            }
        }
    }
    SECTION("one-particle block reproduces the folding rotation of mode "
            "coefficients") {
        // Coefficients (1, 1) on (c_x, c_y) rotate to (cos + sin, cos - sin)
        // of theta/2; theta = pi/2 clears the c_y coefficient.
        const int n = 4;
        const auto basis = enumerate_basis(n, 1);
        for (double theta : {0.37, kPi / 2, 2.1}) {
            Eigen::Vector2d coeffs;
            auto ax = StateVector::basis_state(basis, site_bit(3));
            auto ay = StateVector::basis_state(basis, site_bit(4));
            apply_givens_gate(ax, 3, 4, theta);
            apply_givens_gate(ay, 3, 4, theta);
            Eigen::Matrix2d block;
            block << ax[2].real(), ay[2].real(), ax[3].real(), ay[3].real();
            coeffs = block * Eigen::Vector2d(1.0, 1.0);
            const double c = std::cos(theta / 2);
            const double s = std::sin(theta / 2);
            CHECK_THAT(coeffs(0), WithinAbs(c + s, 1e-15));
            CHECK_THAT(coeffs(1), WithinAbs(c - s, 1e-15));
        }
    }
}

TEST_CASE("mode permutation", "[fock]") {
    const std::vector<int> bitrev4{1, 3, 2, 4};
    SECTION("bit reverse on |{2,3}> sorts with one swap") {
        auto v = StateVector::basis_state(enumerate_basis(4, 2), sites_mask({2, 3}));
        apply_mode_permutation(v, bitrev4);
        CHECK(v.amplitude(sites_mask({2, 3})) == Complex(-1.0));
    }
    SECTION("single particle on a fixed mode") {
        auto v = StateVector::basis_state(enumerate_basis(4, 1), sites_mask({1}));
        apply_mode_permutation(v, bitrev4);
        CHECK(v.amplitude(sites_mask({1})) == Complex(1.0));
    }
    SECTION("identity") {
        std::mt19937_64 rng(3);
        const StateVector v = random_state(enumerate_basis(6, 3), rng);
        StateVector w = v;
        apply_mode_permutation(w, std::vector<int>{1, 2, 3, 4, 5, 6});
        CHECK(max_abs_diff(v, w) == 0.0);
    }
    SECTION("non-bijective rejected") {
        auto v = StateVector::basis_state(enumerate_basis(3, 1), 1);
        CHECK_THROWS_AS(apply_mode_permutation(v, std::vector<int>{1, 1, 2}), Error);
        CHECK_THROWS_AS(apply_mode_permutation(v, std::vector<int>{1, 2}), Error);
        CHECK_THROWS_AS(apply_mode_permutation(v, std::vector<int>{0, 1, 2}), Error);
    }
    SECTION("relabels creation operators, checked against operator algebra") {
        std::mt19937_64 rng(11);
        const int n = 6;
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int m = 0; m <= n; ++m) {
                const auto basis = enumerate_basis(n, m);
                for (Mask mask : basis->states()) {
                    auto v = StateVector::basis_state(basis, mask);
                    apply_mode_permutation(v, perm);
                    FockVector expected = vacuum(n);
                    const auto sites = OccupationState{mask, n}.sites();
                    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
                        expected =
                            creation(n, perm[static_cast<std::size_t>(*it - 1)]) *
                            expected;
                    }
                    CHECK(max_abs_diff(embed(v), expected) < 1e-15);
                }
            }
        }
    }
    SECTION("inverse permutation restores the state exactly") {
        std::mt19937_64 rng(5);
        std::vector<int> perm{3, 1, 5, 2, 4};
        std::vector<int> back(5);
        for (int i = 0; i < 5; ++i) {
            back[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = i + 1;
        }
        const StateVector v = random_state(enumerate_basis(5, 2), rng);
        StateVector w = v;
        apply_mode_permutation(w, perm);
        apply_mode_permutation(w, back);
        CHECK(max_abs_diff(v, w) == 0.0);
    }
}

TEST_CASE("translation", "[fock]") {
    SECTION("no wrap") {
        auto v = StateVector::basis_state(enumerate_basis(4, 1), sites_mask({1}));
        translation_apply(v);
        CHECK(v.amplitude(sites_mask({2})) == Complex(1.0));
    }
    SECTION("wrap with two particles") {
        auto v = StateVector::basis_state(enumerate_basis(4, 2), sites_mask({1, 4}));
        translation_apply(v);
        CHECK(v.amplitude(sites_mask({1, 2})) == Complex(-1.0));
    }
    SECTION("momentum eigenstate {1,3} at N=4 has eigenvalue -1") {
        const int n = 4;
        const FockVector f = momentum_product(n, {1, 3});
        StateVector v(enumerate_basis(n, 2));
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = f(static_cast<Eigen::Index>(v.basis().state(i)));
        }
        StateVector tv = v;
        translation_apply(tv);
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(std::abs(tv[i] + v[i]) < 1e-14);
        }
    }
    SECTION("N applications are the identity, sign included") {
        for (int n : {3, 4, 5, 8}) {
            for (int m = 0; m <= n; ++m) {
                const auto basis = enumerate_basis(n, m);
                for (Mask mask : basis->states()) {
                    auto v = StateVector::basis_state(basis, mask);
                    for (int i = 0; i < n; ++i) {
                        translation_apply(v);
                    }
                    CHECK(v.amplitude(mask) == Complex(1.0));
                }
            }
        }
    }
    SECTION("agrees with shifting every creation operator") {
        const int n = 5;
        for (int m = 0; m <= n; ++m) {
            const auto basis = enumerate_basis(n, m);
            for (Mask mask : basis->states()) {
                auto v = StateVector::basis_state(basis, mask);
                translation_apply(v);
                FockVector expected = vacuum(n);
                const auto sites = OccupationState{mask, n}.sites();
                for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
                    expected = creation(n, *it % n + 1) * expected;
                }
                CHECK(max_abs_diff(embed(v), expected) < 1e-15);
            }
        }
    }
}

TEST_CASE("inner product", "[fock]") {
    std::mt19937_64 rng(2);
    const auto basis = enumerate_basis(6, 3);
    const StateVector v = random_state(basis, rng);
    const Complex vv = inner_product(v, v);
    CHECK_THAT(vv.real(), WithinAbs(1.0, 1e-14));
    CHECK(vv.imag() == 0.0);

    const auto b2 = enumerate_basis(2, 1);
    CHECK(inner_product(StateVector::basis_state(b2, 2),
                        StateVector::basis_state(b2, 1)) == Complex(0.0));

    // f+_1|0> and f+_2|0> at N=2, built from the operator algebra
    StateVector f1(b2), f2(b2);
    const FockVector g1 = momentum_product(2, {1});
    const FockVector g2 = momentum_product(2, {2});
    for (std::size_t i = 0; i < 2; ++i) {
        f1[i] = g1(static_cast<Eigen::Index>(b2->state(i)));
        f2[i] = g2(static_cast<Eigen::Index>(b2->state(i)));
    }
    CHECK(std::abs(inner_product(f1, f2)) < 1e-15);

    CHECK_THROWS_AS(inner_product(v, f1), Error);
}

TEST_CASE("gates preserve the norm and invert", "[fock][property]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const int m = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        const StateVector v = random_state(enumerate_basis(n, m), rng);
        const int x = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const int y = x + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - x));
        const double theta = angle(rng);
        const double phi = angle(rng);

        StateVector w = v;
        apply_givens_gate(w, x, y, theta);
        CHECK_THAT(w.norm(), WithinAbs(v.norm(), 1e-12));
        apply_givens_gate(w, x, y, -theta);
        CHECK(max_abs_diff(v, w) < 1e-12);

        apply_phase_gate(w, y, phi);
        CHECK_THAT(w.norm(), WithinAbs(v.norm(), 1e-12));
        apply_phase_gate(w, y, -phi);
        CHECK(max_abs_diff(v, w) < 1e-14);

        translation_apply(w);
        CHECK_THAT(w.norm(), WithinAbs(v.norm(), 1e-12));
        CHECK(w.basis() == v.basis());
    }
}

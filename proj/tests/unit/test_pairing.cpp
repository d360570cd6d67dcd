// SPDX-License-Identifier: Apache-2.0
//
// relaylab: unitary relay processing and subcarrier pairing for AF OFDM relays
// Copyright (C) 2026 The relaylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace relaylab;
using namespace relaylab::testing;
using Catch::Approx;

TEST_CASE("sorted_pairing - toy examples") {
    const auto m1 = pairing_metrics(toy_params(false), toy_channel(false));
    CHECK(sorted_pairing(m1, false).map() == std::vector<int>{1, 0});

    const auto m2 = pairing_metrics(toy_params(true), toy_channel(true));
    // Input keys q2 / (1 + snr_sd) = [2, 0.2].
    CHECK(m2.q2[0] / (1.0 + m2.snr_sd[0]) == Approx(2.0));
    CHECK(m2.q2[1] / (1.0 + m2.snr_sd[1]) == Approx(0.2));
    CHECK(sorted_pairing(m2, true).map() == std::vector<int>{1, 0});
}

TEST_CASE("sorted_pairing - degenerate equal gains") {
    PairingMetrics m;
    m.q2 = Eigen::VectorXd::Constant(5, 2.0);
    m.p2 = Eigen::VectorXd::Constant(5, 0.3);
    m.snr_sd = Eigen::VectorXd::Constant(5, 1.0);
    m.snr_sr = m.snr_rd = m.q2;
    for (bool direct : {false, true}) {
        const double sorted = rate_pairing(sorted_pairing(m, direct), m, direct).total_bits;
        const double identity = rate_pairing(Permutation::identity(5), m, direct).total_bits;
        CHECK(std::abs(sorted - identity) <= 1e-12);
    }
}

TEST_CASE("sorted_pairing - ties resolve by ascending index") {
    PairingMetrics m;
    m.q2 = Eigen::VectorXd::Constant(3, 1.0);
    m.p2 = Eigen::VectorXd::Constant(3, 0.5);
    m.snr_sd = Eigen::VectorXd::Zero(3);
    CHECK(sorted_pairing(m, false) == Permutation::identity(3));
}

TEST_CASE("brute_force_pairing - toy and singleton cases") {
    const auto m1 = pairing_metrics(toy_params(false), toy_channel(false));
    const auto b1 = brute_force_pairing(m1, false);
    CHECK(b1.perm.map() == std::vector<int>{1, 0});
    CHECK(b1.total_bits == Approx(0.5 * std::log2(6.9)).epsilon(1e-13));

    const auto m2 = pairing_metrics(toy_params(true), toy_channel(true));
    const auto b2 = brute_force_pairing(m2, true);
    CHECK(b2.perm.map() == std::vector<int>{1, 0});
    CHECK(b2.total_bits == Approx(0.5 * (std::log2(5.6) + std::log2(5.5))).epsilon(1e-13));

    PairingMetrics single;
    single.q2 = Eigen::VectorXd::Constant(1, 3.0);
    single.p2 = Eigen::VectorXd::Constant(1, 0.5);
    single.snr_sd = Eigen::VectorXd::Zero(1);
    const auto b3 = brute_force_pairing(single, false);
    CHECK(b3.perm.map() == std::vector<int>{0});
    CHECK(b3.total_bits == Approx(0.5 * std::log2(2.5)));
}

TEST_CASE("brute_force_pairing - size guard") {
    Rng rng(1);
    const auto inst = random_instance(10, false, rng);
    const auto m = pairing_metrics(inst.params, inst.channel);
    CHECK_THROWS_AS(brute_force_pairing(m, false), SizeLimitError);
    CHECK_THROWS_AS(brute_force_pairing(m, false, 5), SizeLimitError);
}

TEST_CASE("brute_force_pairing - lexicographically smallest maximizer under ties") {
    PairingMetrics m;
    m.q2 = Eigen::VectorXd::Constant(4, 1.0);
    m.p2 = Eigen::VectorXd::Constant(4, 0.25);
    m.snr_sd = Eigen::VectorXd::Zero(4);
    CHECK(brute_force_pairing(m, false).perm == Permutation::identity(4));
}

TEST_CASE("sorted pairing equals exhaustive optimum") {
    Rng rng(1001);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            for (bool direct : {false, true}) {
                const auto inst = random_instance(n, direct, rng);
                const auto m = pairing_metrics(inst.params, inst.channel);
                const double sorted = rate_pairing(sorted_pairing(m, direct), m, direct).total_bits;
                const double brute = brute_force_pairing(m, direct).total_bits;
                REQUIRE(rel_err(sorted, brute) <= 1e-9);
            }
        }
    }
}

TEST_CASE("solve_assignment_max - agrees with enumeration on arbitrary matrices") {
    Rng rng(77);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 7;
        Eigen::MatrixXd b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = trial % 3 == 0 ? small(rng) : u(rng); // integer ties too
        const auto assigned = solve_assignment_max(b);
        REQUIRE(Permutation(assigned).size() == n);
        double got = 0.0;
        for (int i = 0; i < n; ++i) got += b(i, assigned[static_cast<std::size_t>(i)]);
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        double best = -1e300;
        do {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += b(i, p[static_cast<std::size_t>(i)]);
            best = std::max(best, s);
        } while (std::next_permutation(p.begin(), p.end()));
        REQUIRE(got == Approx(best).margin(1e-12));
    }
}

TEST_CASE("assignment_pairing - toy and degenerate row") {
    const auto m1 = pairing_metrics(toy_params(false), toy_channel(false));
    CHECK(rate_pairing(assignment_pairing(m1, false), m1, false).total_bits == Approx(0.5 * std::log2(6.9)));

    Rng rng(12);
    auto inst = random_instance(6, false, rng);
    inst.channel.h1[2] = 0.0; // input 2 contributes nothing wherever it goes
    const auto m = pairing_metrics(inst.params, inst.channel);
    REQUIRE(pairing_benefit(m, false).row(2).norm() == 0.0);
    const double assigned = rate_pairing(assignment_pairing(m, false), m, false).total_bits;
    CHECK(rel_err(assigned, brute_force_pairing(m, false).total_bits) <= 1e-9);
}

TEST_CASE("assignment_pairing - matches sorted pairing at scale") {
    Rng rng(128);
    for (int n : {16, 64, 128}) {
        for (bool direct : {false, true}) {
            const auto inst = random_instance(n, direct, rng);
            const auto m = pairing_metrics(inst.params, inst.channel);
            const double sorted = rate_pairing(sorted_pairing(m, direct), m, direct).total_bits;
            const double assigned = rate_pairing(assignment_pairing(m, direct), m, direct).total_bits;
            REQUIRE(rel_err(sorted, assigned) <= 1e-9);
        }
    }
}

TEST_CASE("rearrangement - similarly ordered matching maximizes prod(1 + a_i b_sigma(i))") {
    Rng rng(6);
    std::exponential_distribution<double> expo(1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 6;
        std::vector<double> a(static_cast<std::size_t>(n)), b(a.size());
        for (auto& x : a) x = trial % 5 == 0 ? std::floor(3 * expo(rng)) : expo(rng);
        for (auto& x : b) x = expo(rng);
        std::vector<double> as = a, bs = b;
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        double sorted_prod = 1.0;
        for (std::size_t i = 0; i < as.size(); ++i) sorted_prod *= 1.0 + as[i] * bs[i];
        std::vector<int> sigma(a.size());
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            double prod = 1.0;
            for (std::size_t i = 0; i < a.size(); ++i) prod *= 1.0 + a[i] * b[static_cast<std::size_t>(sigma[i])];
            REQUIRE(prod <= sorted_prod * (1.0 + 1e-12));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
}

TEST_CASE("sorted_pairing - dominates identity and is scale covariant") {
    Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 20;
        const bool direct = trial % 2 == 0;
        const auto inst = random_instance(n, direct, rng);
        auto m = pairing_metrics(inst.params, inst.channel);
        const auto perm = sorted_pairing(m, direct);
        REQUIRE(rate_pairing(perm, m, direct).total_bits >=
                rate_pairing(Permutation::identity(n), m, direct).total_bits - 1e-12);
        m.q2 *= 3.7;
        REQUIRE(sorted_pairing(m, direct) == perm);
    }
}

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
using Catch::Approx;

TEST_CASE("frequency_response - impulse is flat") {
    const std::vector<Complex> taps{1.0};
    const auto h = frequency_response(taps, 4);
    REQUIRE(h.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(h[k] - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("frequency_response - zero taps give zero response") {
    const std::vector<Complex> taps{0.0, 0.0};
    CHECK(frequency_response(taps, 8).norm() == 0.0);
}

TEST_CASE("frequency_response - two-point transform of [1, 1]") {
    const std::vector<Complex> taps{1.0, 1.0};
    const auto h = frequency_response(taps, 2);
    CHECK(std::abs(h[0] - Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(h[1]) < 1e-15);
}

TEST_CASE("frequency_response - invalid tap profiles") {
    const std::vector<Complex> none;
    const std::vector<Complex> three{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(frequency_response(none, 4), InvalidTapProfileError);
    CHECK_THROWS_AS(frequency_response(three, 2), InvalidTapProfileError);
}

TEST_CASE("frequency_response - Parseval holds for every L <= N") {
    Rng rng(7);
    std::normal_distribution<double> normal;
    for (int n : {1, 2, 5, 16, 64, 128}) {
        for (int l = 1; l <= n; l += std::max(1, n / 7)) {
            std::vector<Complex> taps(static_cast<std::size_t>(l));
            double tap_energy = 0.0;
            for (auto& t : taps) {
                const double re = normal(rng);
                const double im = normal(rng);
                t = {re, im};
                tap_energy += std::norm(t);
            }
            const double freq_energy = frequency_response(taps, n).squaredNorm() / n;
            CHECK(std::abs(freq_energy - tap_energy) <= 1e-12 * tap_energy);
        }
    }
}

TEST_CASE("generate_channel - mean subcarrier power equals path loss") {
    Geometry geometry;
    geometry.d_sd = geometry.d_sr = geometry.d_rd = 1.0;
    geometry.pathloss_exp = 2.0;
    geometry.taps_per_link = 1;
    const auto params = SystemParams::equal_power(1, 1.0, 1.0, 1.0, 1.0, true);
    Rng rng(2024);
    double sum = 0.0;
    constexpr int draws = 100000;
    for (int t = 0; t < draws; ++t) sum += std::norm(generate_channel(geometry, params, rng).h1[0]);
    const double mean = sum / draws;
    CHECK(mean >= 0.99);
    CHECK(mean <= 1.01);
}

TEST_CASE("generate_channel - path loss scales the average gain") {
    Geometry geometry; // d_sr = 6, alpha = 2
    geometry.taps_per_link = 4;
    const auto params = SystemParams::equal_power(16, 1.0, 1.0, 1.0, 1.0, true);
    Rng rng(99);
    double sum = 0.0;
    constexpr int draws = 20000;
    for (int t = 0; t < draws; ++t) sum += generate_channel(geometry, params, rng).h1.squaredNorm() / 16;
    CHECK(sum / draws == Approx(1.0 / 36.0).epsilon(0.03));
}

TEST_CASE("generate_channel - direct_path=false zeroes h0") {
    Geometry geometry;
    const auto params = SystemParams::equal_power(32, 1.0, 1.0, 1.0, 1.0, false);
    Rng rng(1);
    const auto ch = generate_channel(geometry, params, rng);
    CHECK(ch.h0.norm() == 0.0);
    CHECK(ch.h1.norm() > 0.0);
}

TEST_CASE("generate_channel - same seed gives identical realization") {
    Geometry geometry;
    const auto params = SystemParams::equal_power(128, 1.0, 1.0, 1.0, 1.0, true);
    Rng a(555), b(555);
    const auto ca = generate_channel(geometry, params, a);
    const auto cb = generate_channel(geometry, params, b);
    CHECK(ca.h0 == cb.h0);
    CHECK(ca.h1 == cb.h1);
    CHECK(ca.h2 == cb.h2);
}

TEST_CASE("generate_channel - geometry invariants") {
    const auto params = SystemParams::equal_power(8, 1.0, 1.0, 1.0, 1.0, true);
    Rng rng(3);
    Geometry g;
    g.taps_per_link = 9;
    CHECK_THROWS_AS(generate_channel(g, params, rng), InvalidParamsError);
    g.taps_per_link = 2;
    g.d_sr = 0.0;
    CHECK_THROWS_AS(generate_channel(g, params, rng), InvalidParamsError);
}

TEST_CASE("SystemParams - invariants") {
    auto p = SystemParams::equal_power(4, 8.0, 1.0, 1.0, 1.0, false);
    CHECK_NOTHROW(p.validate());
    CHECK(p.d_s.squaredNorm() == Approx(8.0));
    p.d_s[0] = 3.0;
    CHECK_THROWS_AS(p.validate(), InvalidParamsError);
    p = SystemParams::equal_power(4, 8.0, 1.0, 0.0, 1.0, false);
    CHECK_THROWS_AS(p.validate(), InvalidParamsError);
    p = SystemParams::equal_power(0, 8.0, 1.0, 1.0, 1.0, false);
    CHECK_THROWS_AS(p.validate(), InvalidParamsError);
}

TEST_CASE("derive_relay_gain - direct substitution") {
    auto params = relaylab::testing::toy_params(false);
    Eigen::VectorXcd h1(2);
    h1 << 2.0, 1.0;
    CHECK(derive_relay_gain(params, h1) == Approx(1.0).epsilon(1e-15));

    params.p_r = 4.0;
    CHECK(derive_relay_gain(params, Eigen::VectorXcd::Zero(2)) == Approx(std::sqrt(2.0)).epsilon(1e-15));

    params.p_r = 2.0;
    h1 << 1.0, 1.0;
    CHECK(derive_relay_gain(params, h1) == Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("derive_relay_gain - relay output power equals P_r for any unitary W") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 7;
        const auto inst = relaylab::testing::random_instance(n, false, rng);
        const auto& p = inst.params;
        const double d_r = derive_relay_gain(p, inst.channel.h1);
        const Eigen::MatrixXcd w = haar_random(n, rng).matrix();
        const Eigen::ArrayXd per_input =
            p.d_s.array().square() * inst.channel.h1.array().abs2() + p.sigma_r2;
        double power = 0.0;
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) power += d_r * d_r * std::norm(w(k, m)) * per_input[m];
        REQUIRE(std::abs(power - p.p_r) <= 1e-9 * p.p_r);
    }
}

TEST_CASE("pairing_metrics - toy values") {
    const auto m = pairing_metrics(relaylab::testing::toy_params(false), relaylab::testing::toy_channel(false), 1.0);
    CHECK(m.q2[0] == Approx(4.0));
    CHECK(m.q2[1] == Approx(1.0));
    CHECK(m.p2[0] == Approx(0.5));
    CHECK(m.p2[1] == Approx(0.9));
    CHECK(m.snr_sd.norm() == 0.0);
}

TEST_CASE("pairing_metrics - zero relay-destination gain") {
    auto ch = relaylab::testing::toy_channel(false);
    ch.h2.setZero();
    const auto m = pairing_metrics(relaylab::testing::toy_params(false), ch, 1.0);
    CHECK(m.p2.norm() == 0.0);
}

TEST_CASE("pairing_metrics - invariants on random channels") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 12;
        const bool direct = trial % 2 == 0;
        const auto inst = relaylab::testing::random_instance(n, direct, rng);
        const auto m = pairing_metrics(inst.params, inst.channel);
        const double sr2 = inst.params.sigma_r2;
        REQUIRE(m.q2.allFinite());
        REQUIRE((m.q2.array() >= 0).all());
        REQUIRE((m.p2.array() >= 0).all());
        REQUIRE((m.p2.array() < 1.0 / sr2).all());
        REQUIRE((m.snr_sd.array() >= 0).all());
        // p2 is the saturating map of snr_rd.
        const Eigen::ArrayXd mapped = m.snr_rd.array() / (1.0 + sr2 * m.snr_rd.array());
        REQUIRE(((m.p2.array() - mapped).abs() <= 1e-12 * mapped.max(1e-300)).all());
        // Ranking by p2 equals ranking by snr_rd.
        std::vector<int> by_p(n), by_snr(n);
        std::iota(by_p.begin(), by_p.end(), 0);
        std::iota(by_snr.begin(), by_snr.end(), 0);
        std::sort(by_p.begin(), by_p.end(), [&](int a, int b) { return m.p2[a] < m.p2[b]; });
        std::sort(by_snr.begin(), by_snr.end(), [&](int a, int b) { return m.snr_rd[a] < m.snr_rd[b]; });
        REQUIRE(by_p == by_snr);
    }
}

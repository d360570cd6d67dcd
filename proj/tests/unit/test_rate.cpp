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

namespace {

// Independent route: the achievable-rate definition in output space,
// 1/2 log2 det(I + R_n^{-1} H_eq H_eq^H), via LU. With a direct path, the MRC-factorized
// form det(I + Y0^H Y0) * det(I + B (I + Y0^H Y0)^{-1} B^H).
double rate_by_definition(const Eigen::MatrixXcd& w, const SystemParams& params, const ChannelRealization& ch) {
    const int n = params.n_subcarriers;
    const auto model = equivalent_model(w, params, ch);
    const Eigen::MatrixXcd rn_inv = model.r_n.inverse();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    if (!params.direct_path) {
        const Complex det = (id + rn_inv * model.h_eq * model.h_eq.adjoint()).determinant();
        return 0.5 * std::log2(det.real());
    }
    const Eigen::VectorXd e = (1.0 + model.upsilon0_sq.array()).matrix();
    const Eigen::MatrixXcd b = model.r_n.diagonal().cwiseSqrt().cwiseInverse().asDiagonal() * model.h_eq;
    const Eigen::MatrixXcd inner = id + b * e.cwiseInverse().cast<Complex>().asDiagonal() * b.adjoint();
    return 0.5 * (e.array().log2().sum() + std::log2(inner.determinant().real()));
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    return Permutation(std::move(map));
}

} // namespace

TEST_CASE("rate_general - scalar channel") {
    auto params = SystemParams::equal_power(1, 1.0, 2.0, 1.0, 1.0, false);
    ChannelRealization ch{Eigen::VectorXcd::Zero(1), Eigen::VectorXcd::Ones(1), Eigen::VectorXcd::Ones(1)};
    REQUIRE(derive_relay_gain(params, ch.h1) == Approx(1.0));
    const double expected = 0.5 * std::log2(1.5);
    CHECK(rate_general(Eigen::MatrixXcd::Identity(1, 1), params, ch) == Approx(expected).epsilon(1e-14));
    CHECK(expected == Approx(0.29248).margin(5e-6));
}

TEST_CASE("rate_general - no signal without h1 and direct path") {
    Rng rng(1);
    auto inst = random_instance(5, false, rng);
    inst.channel.h1.setZero();
    CHECK(rate_general(haar_random(5, rng).matrix(), inst.params, inst.channel) == 0.0);
}

TEST_CASE("rate_general - two-subcarrier toy identity") {
    const double r = rate_general(Eigen::MatrixXcd::Identity(2, 2), toy_params(false), toy_channel(false));
    CHECK(r == Approx(0.5 * std::log2(5.7)).epsilon(1e-13));
    CHECK(r == Approx(1.2555).margin(5e-5));
}

TEST_CASE("rate_general - rejects non-unitary W with its residual") {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(2, 2);
    w(0, 1) = 1e-3;
    try {
        rate_general(w, toy_params(false), toy_channel(false));
        FAIL("expected UnitarityError");
    } catch (const UnitarityError& e) {
        CHECK(e.residual() == Approx(unitarity_residual(w)));
        CHECK(e.residual() > kRateUnitarityTol);
    }
    w(0, 1) = 1e-10; // within tolerance
    CHECK_NOTHROW(rate_general(w, toy_params(false), toy_channel(false)));
}

TEST_CASE("rate_general - matches the output-space definition") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 9;
        const bool direct = trial % 2 == 1;
        const auto inst = random_instance(n, direct, rng);
        const Eigen::MatrixXcd w = haar_random(n, rng).matrix();
        REQUIRE(rel_err(rate_general(w, inst.params, inst.channel), rate_by_definition(w, inst.params, inst.channel)) <
                1e-10);
    }
}

TEST_CASE("equivalent_model - structure") {
    Rng rng(4);
    const auto inst = random_instance(6, true, rng);
    const auto model = equivalent_model(haar_random(6, rng).matrix(), inst.params, inst.channel);
    const Eigen::MatrixXcd off = model.r_n - Eigen::MatrixXcd(model.r_n.diagonal().asDiagonal());
    CHECK(off.norm() == 0.0);
    CHECK((model.r_n.diagonal().real().array() > 0).all());
    CHECK((model.upsilon0_sq.array() >= 0).all());
    const auto no_direct = random_instance(6, false, rng);
    CHECK(equivalent_model(Eigen::MatrixXcd::Identity(6, 6), no_direct.params, no_direct.channel)
              .upsilon0_sq.norm() == 0.0);
}

TEST_CASE("rate_pairing - toy examples") {
    const auto m1 = pairing_metrics(toy_params(false), toy_channel(false));
    const auto swap = Permutation({1, 0});
    CHECK(rate_pairing(Permutation::identity(2), m1, false).total_bits == Approx(0.5 * std::log2(5.7)).epsilon(1e-13));
    CHECK(rate_pairing(swap, m1, false).total_bits == Approx(0.5 * std::log2(6.9)).epsilon(1e-13));
    CHECK(0.5 * std::log2(6.9) == Approx(1.3933).margin(5e-5));

    const auto m2 = pairing_metrics(toy_params(true), toy_channel(true));
    CHECK(m2.snr_sd[0] == Approx(1.0));
    CHECK(m2.snr_sd[1] == Approx(4.0));
    const double expected = 0.5 * (std::log2(1.0 + 1.0 + 3.6) + std::log2(1.0 + 4.0 + 0.5));
    const auto breakdown = rate_pairing(swap, m2, true);
    CHECK(breakdown.total_bits == Approx(expected).epsilon(1e-13));
    CHECK(expected == Approx(2.4724).margin(5e-5));
    REQUIRE(breakdown.per_pair.size() == 2);
    CHECK(breakdown.per_pair[0].output == 1);
    CHECK(breakdown.per_pair[0].sinr == Approx(3.6));
}

TEST_CASE("rate_pairing - rejects mismatched permutation") {
    const auto m = pairing_metrics(toy_params(false), toy_channel(false));
    CHECK_THROWS_AS(rate_pairing(Permutation::identity(3), m, false), InvalidPermutationError);
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidPermutationError);
    CHECK_THROWS_AS(Permutation({0, 2}), InvalidPermutationError);
}

TEST_CASE("pair_sinr - products of effective gains") {
    const auto m = pairing_metrics(toy_params(false), toy_channel(false));
    CHECK(pair_sinr(0, 1, m) == Approx(3.6));
    CHECK(pair_sinr(1, 0, m) == Approx(0.5));
    auto zeroed = m;
    zeroed.q2[0] = 0.0;
    CHECK(pair_sinr(0, 1, zeroed) == 0.0);
    CHECK_THROWS_AS(pair_sinr(2, 0, m), std::out_of_range);
    CHECK_THROWS_AS(pair_sinr(0, -1, m), std::out_of_range);
}

TEST_CASE("rate_pairing - closed form equals log-det on permutation matrices") {
    Rng rng(2718);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 7;
        const bool direct = trial % 2 == 0;
        const auto inst = random_instance(n, direct, rng);
        const auto perm = random_permutation(n, rng);
        const auto m = pairing_metrics(inst.params, inst.channel);
        const double closed = rate_pairing(perm, m, direct).total_bits;
        const double general = rate_general(perm.matrix(), inst.params, inst.channel);
        REQUIRE(rel_err(closed, general) <= 1e-10);
    }
}

TEST_CASE("RateBreakdown - total equals sum of pairs and outputs form a permutation") {
    Rng rng(8);
    const auto inst = random_instance(9, true, rng);
    const auto m = pairing_metrics(inst.params, inst.channel);
    const auto b = rate_pairing(random_permutation(9, rng), m, true);
    double sum = 0.0;
    std::vector<int> outs;
    for (const auto& p : b.per_pair) {
        sum += p.bits;
        outs.push_back(p.output);
    }
    CHECK(rel_err(sum, b.total_bits) <= 1e-12);
    std::sort(outs.begin(), outs.end());
    for (int j = 0; j < 9; ++j) CHECK(outs[static_cast<std::size_t>(j)] == j);
}

TEST_CASE("rate_general - invariant under per-entry channel phases") {
    Rng rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 6;
        const bool direct = trial % 2 == 0;
        auto inst = random_instance(n, direct, rng);
        const Eigen::MatrixXcd w = random_permutation(n, rng).matrix();
        const double before = rate_general(w, inst.params, inst.channel);
        for (auto* h : {&inst.channel.h0, &inst.channel.h1, &inst.channel.h2})
            for (int k = 0; k < n; ++k) (*h)[k] *= std::polar(1.0, angle(rng));
        REQUIRE(std::abs(rate_general(w, inst.params, inst.channel) - before) <= 1e-12 * std::max(1.0, before));
    }
}

TEST_CASE("rate_general - invariant under diagonal unitary factors on either side") {
    Rng rng(32);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const auto inst = random_instance(n, trial % 2 == 0, rng);
        const Eigen::MatrixXcd w = haar_random(n, rng).matrix();
        Eigen::VectorXcd e1(n), e2(n);
        for (int k = 0; k < n; ++k) {
            e1[k] = std::polar(1.0, angle(rng));
            e2[k] = std::polar(1.0, angle(rng));
        }
        const Eigen::MatrixXcd rotated = e1.asDiagonal() * w * e2.asDiagonal();
        REQUIRE(std::abs(rate_general(rotated, inst.params, inst.channel) -
                         rate_general(w, inst.params, inst.channel)) <= 1e-10);
    }
}

TEST_CASE("rate_pairing - direct path never lowers the rate, rates are nonnegative") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const auto inst = random_instance(n, true, rng);
        const auto m = pairing_metrics(inst.params, inst.channel);
        const auto perm = random_permutation(n, rng);
        const double with = rate_pairing(perm, m, true).total_bits;
        const double without = rate_pairing(perm, m, false).total_bits;
        REQUIRE(without >= 0.0);
        REQUIRE(with >= without);
        REQUIRE(rate_general(haar_random(n, rng).matrix(), inst.params, inst.channel) >= 0.0);
    }
}

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

#include "relaylab/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relaylab/errors.hpp"

namespace relaylab {

SystemParams SystemParams::equal_power(int n, double p_s, double p_r, double sigma_r2, double sigma_d2,
                                       bool direct_path) {
    SystemParams params;
    params.n_subcarriers = n;
    params.p_s = p_s;
    params.p_r = p_r;
    params.sigma_r2 = sigma_r2;
    params.sigma_d2 = sigma_d2;
    params.direct_path = direct_path;
    params.d_s = Eigen::VectorXd::Constant(n > 0 ? n : 0, n > 0 ? std::sqrt(p_s / n) : 0.0);
    return params;
}

void SystemParams::validate() const {
    if (n_subcarriers < 1) throw InvalidParamsError("n_subcarriers must be >= 1");
    if (!(sigma_r2 > 0.0)) throw InvalidParamsError("sigma_r2 must be > 0");
    if (!(sigma_d2 > 0.0)) throw InvalidParamsError("sigma_d2 must be > 0");
    if (!(p_s > 0.0)) throw InvalidParamsError("p_s must be > 0");
    if (!(p_r > 0.0)) throw InvalidParamsError("p_r must be > 0");
    if (d_s.size() != n_subcarriers)
        throw InvalidParamsError("d_s has " + std::to_string(d_s.size()) + " entries, expected " +
                                 std::to_string(n_subcarriers));
    if (!d_s.allFinite() || (d_s.array() < 0.0).any())
        throw InvalidParamsError("d_s entries must be finite and nonnegative");
    if (d_s.squaredNorm() > p_s * (1.0 + 1e-9))
        throw InvalidParamsError("source power constraint violated: sum d_s^2 = " +
                                 std::to_string(d_s.squaredNorm()) + " > p_s = " + std::to_string(p_s));
}

void ChannelRealization::validate(int n) const {
    if (h0.size() != n || h1.size() != n || h2.size() != n)
        throw InvalidParamsError("channel vectors must all have length " + std::to_string(n));
    if (!h0.allFinite() || !h1.allFinite() || !h2.allFinite())
        throw InvalidParamsError("channel gains must be finite");
}

void Geometry::validate(int n_subcarriers) const {
    if (!(d_sd > 0.0 && d_sr > 0.0 && d_rd > 0.0)) throw InvalidParamsError("distances must be > 0");
    if (!(pathloss_exp > 0.0)) throw InvalidParamsError("pathloss exponent must be > 0");
    if (taps_per_link < 1 || taps_per_link > n_subcarriers)
        throw InvalidParamsError("taps_per_link must lie in [1, n_subcarriers]");
}

Eigen::VectorXcd frequency_response(std::span<const Complex> taps, int n) {
    const auto n_taps = static_cast<int>(taps.size());
    if (n < 1 || n_taps == 0 || n_taps > n)
        throw InvalidTapProfileError("tap profile length " + std::to_string(n_taps) + " invalid for N = " +
                                     std::to_string(n));
    Eigen::VectorXcd response(n);
    const double step = -2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (int l = 0; l < n_taps; ++l) {
            // k*l reduced mod n keeps the twiddle argument small for large N.
            const auto kl = static_cast<long long>(k) * l % n;
            acc += taps[l] * std::polar(1.0, step * static_cast<double>(kl));
        }
        response[k] = acc;
    }
    return response;
}

namespace {

Eigen::VectorXcd draw_link(double distance, const Geometry& geometry, int n, Rng& rng) {
    const double path_loss = std::pow(distance, -geometry.pathloss_exp);
    const double per_tap_std = std::sqrt(path_loss / geometry.taps_per_link / 2.0);
    std::normal_distribution<double> normal(0.0, per_tap_std);
    std::vector<Complex> taps(geometry.taps_per_link);
    for (auto& tap : taps) {
        const double re = normal(rng);
        const double im = normal(rng);
        tap = {re, im};
    }
    return frequency_response(taps, n);
}

} // namespace

ChannelRealization generate_channel(const Geometry& geometry, const SystemParams& params, Rng& rng) {
    const int n = params.n_subcarriers;
    geometry.validate(n);
    ChannelRealization channel;
    // Fixed draw order: h0, h1, h2. h0 is drawn even when unused so the relay links
    // of a given seed do not depend on the direct-path flag.
    channel.h0 = draw_link(geometry.d_sd, geometry, n, rng);
    channel.h1 = draw_link(geometry.d_sr, geometry, n, rng);
    channel.h2 = draw_link(geometry.d_rd, geometry, n, rng);
    if (!params.direct_path) channel.h0.setZero();
    return channel;
}

double derive_relay_gain(const SystemParams& params, const Eigen::VectorXcd& h1) {
    const double received = (params.d_s.array().square() * h1.array().abs2()).sum();
    return std::sqrt(params.p_r / (received + params.n_subcarriers * params.sigma_r2));
}

PairingMetrics pairing_metrics(const SystemParams& params, const ChannelRealization& channel, double d_r) {
    const int n = params.n_subcarriers;
    channel.validate(n);
    PairingMetrics m;
    m.d_r = d_r;
    const Eigen::ArrayXd ds2 = params.d_s.array().square();
    const Eigen::ArrayXd h0sq = params.direct_path ? Eigen::ArrayXd(channel.h0.array().abs2()) : Eigen::ArrayXd::Zero(n);
    const Eigen::ArrayXd h1sq = channel.h1.array().abs2();
    const Eigen::ArrayXd relay_out = channel.h2.array().abs2() * (d_r * d_r);

    m.q2 = h1sq * ds2;
    m.p2 = relay_out / (params.sigma_d2 + params.sigma_r2 * relay_out);
    m.snr_sr = h1sq * ds2 / params.sigma_r2;
    m.snr_rd = relay_out / params.sigma_d2;
    m.snr_sd = h0sq * ds2 / params.sigma_d2;
    return m;
}

PairingMetrics pairing_metrics(const SystemParams& params, const ChannelRealization& channel) {
    return pairing_metrics(params, channel, derive_relay_gain(params, channel.h1));
}

} // namespace relaylab

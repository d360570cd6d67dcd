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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "relaylab/random.hpp"

namespace relaylab {

using Complex = std::complex<double>;

/// Powers, noise variances and the per-subcarrier source amplitudes d_s.
///
/// `d_s` holds amplitude coefficients: subcarrier k is transmitted with power d_s[k]^2,
/// and the total sum of d_s[k]^2 may not exceed `p_s`.
struct SystemParams {
    int n_subcarriers = 1;
    double sigma_r2 = 1.0;
    double sigma_d2 = 1.0;
    double p_s = 1.0;
    double p_r = 1.0;
    Eigen::VectorXd d_s;
    bool direct_path = false;

    /// Equal allocation d_s[k] = sqrt(p_s / n).
    static SystemParams equal_power(int n, double p_s, double p_r, double sigma_r2, double sigma_d2, bool direct_path);

    /// Throws InvalidParamsError on any violated invariant.
    void validate() const;
};

/// Per-subcarrier complex gains of the three links. h0 is all-zero without a direct path.
struct ChannelRealization {
    Eigen::VectorXcd h0; // source -> destination
    Eigen::VectorXcd h1; // source -> relay
    Eigen::VectorXcd h2; // relay -> destination

    int size() const noexcept { return static_cast<int>(h1.size()); }
    void validate(int n) const;
};

struct Geometry {
    double d_sd = 20.0;
    double d_sr = 6.0;
    double d_rd = 16.0;
    double pathloss_exp = 2.0;
    int taps_per_link = 11;

    void validate(int n_subcarriers) const;
};

/// Effective gains consumed by the pairing optimizers.
struct PairingMetrics {
    Eigen::VectorXd q2;     // |h1_i d_s_i|^2
    Eigen::VectorXd p2;     // |h2_j d_r|^2 / (sigma_d2 + sigma_r2 |h2_j d_r|^2)
    Eigen::VectorXd snr_sr; // |h1_i|^2 d_s_i^2 / sigma_r2
    Eigen::VectorXd snr_rd; // |h2_j|^2 d_r^2 / sigma_d2
    Eigen::VectorXd snr_sd; // |h0_i|^2 d_s_i^2 / sigma_d2
    double d_r = 0.0;

    int size() const noexcept { return static_cast<int>(q2.size()); }
};

/// Unnormalized N-point DFT of a tap profile: H_k = sum_l g_l exp(-i 2 pi k l / N).
Eigen::VectorXcd frequency_response(std::span<const Complex> taps, int n);

/// Draws one frequency-selective realization. Each link gets `taps_per_link` i.i.d.
/// CN(0, d^-alpha / L) taps, so E|H_k|^2 equals the path loss d^-alpha.
ChannelRealization generate_channel(const Geometry& geometry, const SystemParams& params, Rng& rng);

/// Equal-amplification relay gain meeting the relay power budget with equality.
double derive_relay_gain(const SystemParams& params, const Eigen::VectorXcd& h1);

PairingMetrics pairing_metrics(const SystemParams& params, const ChannelRealization& channel, double d_r);

/// Convenience overload deriving d_r from the channel.
PairingMetrics pairing_metrics(const SystemParams& params, const ChannelRealization& channel);

} // namespace relaylab

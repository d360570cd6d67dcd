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

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "relaylab/relaylab.hpp"

namespace relaylab::testing {

// Two-subcarrier toy: N = 2, unit noise, d_s = [1, 1], h1 = [2, 1], h2 = [1, 3], P_r = 7 so d_r = 1.
inline SystemParams toy_params(bool direct) {
    SystemParams p = SystemParams::equal_power(2, 2.0, 7.0, 1.0, 1.0, direct);
    p.d_s << 1.0, 1.0;
    return p;
}

inline ChannelRealization toy_channel(bool direct) {
    ChannelRealization c;
    c.h0 = Eigen::VectorXcd::Zero(2);
    if (direct) c.h0 << 1.0, 2.0; // toy with direct path
    c.h1 = Eigen::VectorXcd(2);
    c.h1 << 2.0, 1.0;
    c.h2 = Eigen::VectorXcd(2);
    c.h2 << 1.0, 3.0;
    return c;
}

// Random instance with per-subcarrier magnitudes spread over a few decades.
inline VerificationInstance random_instance(int n, bool direct, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    std::uniform_real_distribution<double> log_scale(-1.5, 1.5);
    auto draw = [&](double scale) {
        Eigen::VectorXcd v(n);
        for (int k = 0; k < n; ++k) {
            const double re = normal(rng);
            const double im = normal(rng);
            v[k] = Complex(re, im) * scale;
        }
        return v;
    };
    VerificationInstance inst;
    const double p_s = std::pow(10.0, log_scale(rng) + 1.0) * n;
    inst.params = SystemParams::equal_power(n, p_s, p_s * std::pow(10.0, log_scale(rng)), 1.0,
                                            std::pow(10.0, log_scale(rng) / 3.0), direct);
    inst.channel.h0 = direct ? draw(std::pow(10.0, log_scale(rng))) : Eigen::VectorXcd::Zero(n);
    inst.channel.h1 = draw(std::pow(10.0, log_scale(rng)));
    inst.channel.h2 = draw(std::pow(10.0, log_scale(rng)));
    return inst;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b))); }

} // namespace relaylab::testing

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

#include "relaylab/rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>

#include "relaylab/errors.hpp"

namespace relaylab {

namespace {

struct Upsilon {
    Eigen::VectorXcd y2; // R_n^{-1/2} H_2 D_r diagonal
    Eigen::VectorXcd y1; // H_1 D_s diagonal
    Eigen::VectorXd y0sq;
};

Upsilon upsilon_terms(const SystemParams& params, const ChannelRealization& channel) {
    const int n = params.n_subcarriers;
    const double d_r = derive_relay_gain(params, channel.h1);
    Upsilon u;
    const Eigen::VectorXcd relayed = channel.h2 * d_r;
    const Eigen::ArrayXd rn = params.sigma_r2 * relayed.array().abs2() + params.sigma_d2;
    u.y2 = relayed.array() / rn.sqrt().cast<Complex>();
    u.y1 = channel.h1.array() * params.d_s.array().cast<Complex>();
    if (params.direct_path)
        u.y0sq = channel.h0.array().abs2() * params.d_s.array().square() / params.sigma_d2;
    else
        u.y0sq = Eigen::VectorXd::Zero(n);
    return u;
}

void check_square(const Eigen::MatrixXcd& w, int n) {
    if (w.rows() != n || w.cols() != n)
        throw std::invalid_argument("processing matrix must be " + std::to_string(n) + "x" + std::to_string(n));
}

} // namespace

double unitarity_residual(const Eigen::MatrixXcd& w) {
    return (w * w.adjoint() - Eigen::MatrixXcd::Identity(w.rows(), w.rows())).norm();
}

EquivalentModel equivalent_model(const Eigen::MatrixXcd& w, const SystemParams& params,
                                 const ChannelRealization& channel) {
    const int n = params.n_subcarriers;
    channel.validate(n);
    check_square(w, n);
    const double d_r = derive_relay_gain(params, channel.h1);
    EquivalentModel model;
    const Eigen::VectorXcd h2dr = channel.h2 * d_r;
    const Eigen::VectorXcd h1ds = channel.h1.array() * params.d_s.array().cast<Complex>();
    model.h_eq = h2dr.asDiagonal() * w * h1ds.asDiagonal();
    model.r_n = (params.sigma_r2 * h2dr.array().abs2() + params.sigma_d2).matrix().cast<Complex>().asDiagonal();
    model.upsilon0_sq = upsilon_terms(params, channel).y0sq;
    return model;
}

double rate_general(const Eigen::MatrixXcd& w, const SystemParams& params, const ChannelRealization& channel) {
    const int n = params.n_subcarriers;
    channel.validate(n);
    check_square(w, n);
    const double residual = unitarity_residual(w);
    if (!(residual <= kRateUnitarityTol)) throw UnitarityError(residual);

    const Upsilon u = upsilon_terms(params, channel);
    const Eigen::MatrixXcd b = u.y2.asDiagonal() * w * u.y1.asDiagonal();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    m.selfadjointView<Eigen::Lower>().rankUpdate(b.adjoint());
    m.diagonal().real() += u.y0sq;

    const Eigen::LLT<Eigen::MatrixXcd, Eigen::Lower> llt(m);
    if (llt.info() != Eigen::Success) throw std::runtime_error("rate_general: Cholesky factorization failed");
    const double log_det = 2.0 * llt.matrixLLT().diagonal().real().array().log().sum();
    return 0.5 * log_det / std::numbers::ln2;
}

double pair_sinr(int i, int j, const PairingMetrics& metrics) {
    const int n = metrics.size();
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("pair index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside 0.." + std::to_string(n - 1));
    return metrics.q2[i] * metrics.p2[j];
}

double pair_bits(int i, int j, const PairingMetrics& metrics, bool direct) {
    const double sinr = pair_sinr(i, j, metrics);
    return 0.5 * std::log2(1.0 + (direct ? metrics.snr_sd[i] : 0.0) + sinr);
}

RateBreakdown rate_pairing(const Permutation& perm, const PairingMetrics& metrics, bool direct) {
    if (perm.size() != metrics.size())
        throw InvalidPermutationError("permutation size " + std::to_string(perm.size()) +
                                      " does not match " + std::to_string(metrics.size()) + " subcarriers");
    RateBreakdown out;
    out.per_pair.reserve(static_cast<std::size_t>(perm.size()));
    for (int i = 0; i < perm.size(); ++i) {
        const int j = perm[i];
        const double sinr = pair_sinr(i, j, metrics);
        const double bits = 0.5 * std::log2(1.0 + (direct ? metrics.snr_sd[i] : 0.0) + sinr);
        out.per_pair.push_back({i, j, sinr, bits});
        out.total_bits += bits;
    }
    return out;
}

} // namespace relaylab

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

#include <vector>

#include <Eigen/Core>

#include "relaylab/channel.hpp"
#include "relaylab/permutation.hpp"

namespace relaylab {

/// Unitarity tolerance ||W W^H - I||_F accepted by rate_general.
inline constexpr double kRateUnitarityTol = 1e-8;

/// End-to-end equivalent model for a processing matrix W.
struct EquivalentModel {
    Eigen::MatrixXcd h_eq;       // H_2 D_r W H_1 D_s
    Eigen::MatrixXcd r_n;        // sigma_r2 H_2 D_r^2 H_2^H + sigma_d2 I (diagonal)
    Eigen::VectorXd upsilon0_sq; // |h0_i d_s_i|^2 / sigma_d2, zero without a direct path
};

struct PairRate {
    int input = 0;
    int output = 0;
    double sinr = 0.0; // relay-path SINR q2_i p2_j
    double bits = 0.0;
};

struct RateBreakdown {
    double total_bits = 0.0; // summed over subcarriers, includes the half-duplex 1/2
    std::vector<PairRate> per_pair;
};

EquivalentModel equivalent_model(const Eigen::MatrixXcd& w, const SystemParams& params,
                                 const ChannelRealization& channel);

/// Frobenius norm of W W^H - I.
double unitarity_residual(const Eigen::MatrixXcd& w);

/// Achievable rate in bits for an arbitrary unitary relay matrix:
///
///   1/2 log2 det(I + (Y2 W Y1)^H (Y2 W Y1) + Y0^H Y0)
///
/// with Y2 = R_n^{-1/2} H_2 D_r, Y1 = H_1 D_s, Y0 = H_0 D_s / sigma_d. The determinant is
/// taken in input-subcarrier space where the direct-path term lives, through a Cholesky
/// factorization of the Hermitian positive-definite argument.
///
/// Throws UnitarityError when ||W W^H - I||_F > kRateUnitarityTol.
double rate_general(const Eigen::MatrixXcd& w, const SystemParams& params, const ChannelRealization& channel);

/// Closed-form rate for permutation processing. With direct path every pair adds the
/// maximum-ratio-combined direct SNR of its input subcarrier.
RateBreakdown rate_pairing(const Permutation& perm, const PairingMetrics& metrics, bool direct);

/// q2_i p2_j. Throws std::out_of_range for bad indices.
double pair_sinr(int i, int j, const PairingMetrics& metrics);

/// Bits contributed by routing input i to output j.
double pair_bits(int i, int j, const PairingMetrics& metrics, bool direct);

} // namespace relaylab

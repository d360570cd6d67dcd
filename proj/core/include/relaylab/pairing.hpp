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

#include <Eigen/Core>

#include "relaylab/channel.hpp"
#include "relaylab/permutation.hpp"

namespace relaylab {

/// Sorted subcarrier pairing: the input with the k-th largest key is forwarded on the
/// output with the k-th largest key. Input key is q2 (relay only) or q2 / (1 + snr_sd)
/// (direct path); output key is p2. Ties are broken by ascending index. O(N log N).
Permutation sorted_pairing(const PairingMetrics& metrics, bool direct);

struct PairingOptimum {
    Permutation perm;
    double total_bits;
};

/// Exhaustive search over all N! pairings. Returns the lexicographically smallest
/// maximizer. Throws SizeLimitError when N > limit.
PairingOptimum brute_force_pairing(const PairingMetrics& metrics, bool direct, int limit = 9);

/// Optimal pairing via an exact linear-assignment solve on the per-pair bits matrix.
Permutation assignment_pairing(const PairingMetrics& metrics, bool direct);

/// Per-pair bits matrix B(i, j) used by assignment_pairing.
Eigen::MatrixXd pairing_benefit(const PairingMetrics& metrics, bool direct);

/// Maximum-weight perfect matching on a square benefit matrix (shortest augmenting
/// path Hungarian method, O(n^3)). Returns row -> column assignment.
std::vector<int> solve_assignment_max(const Eigen::MatrixXd& benefit);

} // namespace relaylab

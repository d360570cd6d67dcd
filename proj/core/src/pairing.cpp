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

#include "relaylab/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "relaylab/errors.hpp"
#include "relaylab/rate.hpp"

namespace relaylab {

namespace {

std::vector<int> order_descending(const Eigen::VectorXd& key) {
    std::vector<int> idx(static_cast<std::size_t>(key.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] > key[b]; });
    return idx;
}

} // namespace

Permutation sorted_pairing(const PairingMetrics& metrics, bool direct) {
    const int n = metrics.size();
    Eigen::VectorXd in_key = metrics.q2;
    if (direct) in_key = metrics.q2.array() / (1.0 + metrics.snr_sd.array());
    const auto inputs = order_descending(in_key);
    const auto outputs = order_descending(metrics.p2);
    std::vector<int> map(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < inputs.size(); ++k) map[static_cast<std::size_t>(inputs[k])] = outputs[k];
    return Permutation(std::move(map));
}

PairingOptimum brute_force_pairing(const PairingMetrics& metrics, bool direct, int limit) {
    const int n = metrics.size();
    if (n > limit)
        throw SizeLimitError("exhaustive pairing limited to N <= " + std::to_string(limit) + ", got N = " +
                             std::to_string(n));
    const Eigen::MatrixXd bits = pairing_benefit(metrics, direct);
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::vector<int> best = map;
    double best_total = -1.0;
    do {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += bits(i, map[static_cast<std::size_t>(i)]);
        // Strict comparison keeps the first (lexicographically smallest) maximizer.
        if (total > best_total) {
            best_total = total;
            best = map;
        }
    } while (std::next_permutation(map.begin(), map.end()));
    Permutation perm(std::move(best));
    // Report the total in the same summation order as rate_pairing.
    return {perm, rate_pairing(perm, metrics, direct).total_bits};
}

Eigen::MatrixXd pairing_benefit(const PairingMetrics& metrics, bool direct) {
    const int n = metrics.size();
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = pair_bits(i, j, metrics, direct);
    return b;
}

Permutation assignment_pairing(const PairingMetrics& metrics, bool direct) {
    return Permutation(solve_assignment_max(pairing_benefit(metrics, direct)));
}

} // namespace relaylab

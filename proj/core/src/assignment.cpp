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

#include <limits>
#include <stdexcept>
#include <vector>

#include "relaylab/pairing.hpp"

namespace relaylab {

// Shortest augmenting path with row/column potentials (Kuhn-Munkres, Jonker-Volgenant
// style). Minimizes cost = -benefit; exact for real-valued matrices.
std::vector<int> solve_assignment_max(const Eigen::MatrixXd& benefit) {
    if (benefit.rows() != benefit.cols()) throw std::invalid_argument("assignment matrix must be square");
    const int n = static_cast<int>(benefit.rows());
    if (n == 0) return {};
    if (!benefit.allFinite()) throw std::invalid_argument("assignment matrix must be finite");

    constexpr double inf = std::numeric_limits<double>::infinity();
    auto cost = [&](int i, int j) { return -benefit(i - 1, j - 1); };

    // 1-based with a virtual column 0.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> owner(n + 1, 0), way(n + 1, 0);
    for (int row = 1; row <= n; ++row) {
        owner[0] = row;
        int col0 = 0;
        std::vector<double> min_slack(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col0] = true;
            const int i0 = owner[col0];
            double delta = inf;
            int col1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double reduced = cost(i0, j) - u[i0] - v[j];
                if (reduced < min_slack[j]) {
                    min_slack[j] = reduced;
                    way[j] = col0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    col1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            col0 = col1;
        } while (owner[col0] != 0);
        do {
            const int col1 = way[col0];
            owner[col0] = owner[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    std::vector<int> row_to_col(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) row_to_col[static_cast<std::size_t>(owner[j] - 1)] = j - 1;
    return row_to_col;
}

} // namespace relaylab

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

#include "relaylab/permutation.hpp"

#include <numeric>

#include "relaylab/errors.hpp"

namespace relaylab {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    const auto n = static_cast<int>(map_.size());
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidPermutationError("map is not a bijection on 0.." + std::to_string(n - 1));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Eigen::MatrixXcd Permutation::matrix() const {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(size(), size());
    for (int i = 0; i < size(); ++i) w((*this)[i], i) = 1.0;
    return w;
}

} // namespace relaylab

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

namespace relaylab {

/// Subcarrier pairing: input subcarrier i is forwarded on output subcarrier map()[i].
/// Indices are zero-based; user-facing output (CLI) is one-based.
class Permutation {
  public:
    /// Throws InvalidPermutationError unless `map` is a bijection on [0, n).
    explicit Permutation(std::vector<int> map);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& map() const noexcept { return map_; }

    Permutation inverse() const;

    /// Relay processing matrix W with W(map[i], i) = 1, so y_out = W y_in routes input i to output map[i].
    Eigen::MatrixXcd matrix() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> map_;
};

} // namespace relaylab

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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace relaylab {

/// Random stream used throughout the library. Callers own the stream and pass it
/// by reference, so concurrent callers use disjoint streams.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive a substream seed from a master seed and a list of indices. The result
/// depends only on the values, never on call order.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> indices) noexcept {
    std::uint64_t h = mix64(master);
    for (auto idx : indices) {
        h = mix64(h ^ mix64(idx + 0x632be59bd9b4e019ULL));
    }
    return h;
}

} // namespace relaylab

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
#include <string>
#include <vector>

namespace relaylab::cli {

struct VerifyReport {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_details; // one line per failure, including a replay recipe

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
    int n = 4;
    int trials = 200;
    int restarts = 8;
    std::uint64_t seed = 42;
    double tol = -1.0; // < 0 selects the per-command default
    int oracle_limit = 9;
    int max_sweeps = 200;
    double ascent_tol = 1e-9;
    unsigned threads = 0;
};

/// Sorted pairing vs. exhaustive enumeration vs. assignment solve, both direct settings.
/// Default tol: 1e-9 relative.
VerifyReport verify_lemma(const VerifyOptions& options);

/// Ascent restarts never beat the sorted pairing (default slack 1e-6); the best restart
/// reaches it (1e-4 for N = 2, 1e-3 otherwise); directional derivatives at the sorted
/// pairing vanish to 1e-6 along 20 random skew-Hermitian directions.
VerifyReport verify_theorem(const VerifyOptions& options);

/// det(I + A) <= (1 + A_nn) det(I + A_{n-1}) on random Gram matrices of size <= n, plus
/// equality on diagonal matrices to tol (default 1e-12).
VerifyReport verify_bound(const VerifyOptions& options);

/// Seed of the t-th verification instance.
std::uint64_t instance_seed(std::uint64_t seed, int n, int trial, bool direct);

} // namespace relaylab::cli

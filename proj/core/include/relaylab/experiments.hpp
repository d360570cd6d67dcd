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

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relaylab/channel.hpp"
#include "relaylab/random.hpp"

namespace relaylab {

/// Relay processing schemes compared in the Monte-Carlo sweeps. Enumerators are in
/// alphabetical order of their names so enum order equals CSV row order.
enum class Scheme {
    NoSp,           // identity processing
    OptimalSp,      // sorted pairing for the actual scenario
    RandomUnitary,  // Haar-random W
    SpIgnoreDirect, // pairing chosen from relay-path SNRs only, MRC reception
};

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::NoSp, Scheme::OptimalSp, Scheme::RandomUnitary,
                                                   Scheme::SpIgnoreDirect};

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

struct ScenarioConfig {
    Geometry geometry;
    int n_subcarriers = 128;
    int trials = 500;
    std::uint64_t master_seed = 1;
    std::vector<double> snr_db_list{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    std::vector<double> position_ratio_list{0.1, 0.2, 0.375, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    double snr_db_fixed = 14.0;
    std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};
    bool direct_path = true;

    /// Throws InvalidParamsError. `sweep` selects which list must be non-empty.
    enum class Sweep { Snr, Position };
    void validate(Sweep sweep) const;
};

struct SweepRow {
    double sweep_value = 0.0;
    Scheme scheme = Scheme::NoSp;
    double mean_rate_per_subcarrier = 0.0;
    double std_error = 0.0;
    int trials = 0;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows; // sorted by (sweep_value, scheme name)

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Operating point for a per-subcarrier direct-path SNR (sigma_d2 = sigma_r2 = 1):
/// p_s = 10^(snr/10) N d_sd^alpha, p_r = p_s, equal allocation across subcarriers.
SystemParams power_from_snr(double snr_db, const Geometry& geometry, int n, bool direct_path = true);

using SchemeRates = std::map<Scheme, double>;

/// Total rate (bits, all subcarriers) of each requested scheme on one channel. Only
/// RandomUnitary consumes `rng`.
SchemeRates evaluate_schemes(const SystemParams& params, const ChannelRealization& channel, Rng& rng,
                             const std::vector<Scheme>& schemes = {kAllSchemes.begin(), kAllSchemes.end()});

/// Number of worker threads used by the sweeps; 0 means hardware concurrency.
struct ExecutionOptions {
    unsigned threads = 0;
};

SweepResult run_snr_sweep(const ScenarioConfig& config, const ExecutionOptions& exec = {});
SweepResult run_position_sweep(const ScenarioConfig& config, const ExecutionOptions& exec = {});

/// Collinear placement: d_sr = r d_sd / (1 + r), d_rd = d_sd / (1 + r).
Geometry place_relay(const Geometry& base, double ratio);

/// Runs fn(0..count-1) on up to `threads` workers. fn must write only to its own slot.
void parallel_for(int count, unsigned threads, const std::function<void(int)>& fn);

/// Pairwise (cascade) summation in fixed index order.
double pairwise_sum(const double* values, std::size_t count);

/// One random verification instance: channel drawn on the default collinear geometry
/// with taps_per_link = min(n, 11) and an operating SNR uniform in [0, 20] dB.
struct VerificationInstance {
    SystemParams params;
    ChannelRealization channel;
};
VerificationInstance random_verification_instance(int n, bool direct_path, std::uint64_t seed);

} // namespace relaylab

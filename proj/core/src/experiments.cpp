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

#include "relaylab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "relaylab/errors.hpp"
#include "relaylab/pairing.hpp"
#include "relaylab/rate.hpp"
#include "relaylab/unitary.hpp"

namespace relaylab {

std::string_view scheme_name(Scheme scheme) {
    switch (scheme) {
    case Scheme::NoSp: return "no_sp";
    case Scheme::OptimalSp: return "optimal_sp";
    case Scheme::RandomUnitary: return "random_unitary";
    case Scheme::SpIgnoreDirect: return "sp_ignore_direct";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (Scheme s : kAllSchemes)
        if (scheme_name(s) == name) return s;
    return std::nullopt;
}

void ScenarioConfig::validate(Sweep sweep) const {
    if (n_subcarriers < 1) throw InvalidParamsError("n_subcarriers must be >= 1");
    geometry.validate(n_subcarriers);
    if (trials < 1) throw InvalidParamsError("trials must be >= 1");
    if (schemes.empty()) throw InvalidParamsError("at least one scheme is required");
    if (sweep == Sweep::Snr && snr_db_list.empty()) throw InvalidParamsError("snr_db_list must be non-empty");
    if (sweep == Sweep::Position) {
        if (position_ratio_list.empty()) throw InvalidParamsError("position_ratio_list must be non-empty");
        for (double r : position_ratio_list)
            if (!(r > 0.0 && std::isfinite(r))) throw InvalidParamsError("position ratios must be finite and > 0");
    }
}

SystemParams power_from_snr(double snr_db, const Geometry& geometry, int n, bool direct_path) {
    const double p_s = std::pow(10.0, snr_db / 10.0) * n * std::pow(geometry.d_sd, geometry.pathloss_exp);
    return SystemParams::equal_power(n, p_s, p_s, 1.0, 1.0, direct_path);
}

SchemeRates evaluate_schemes(const SystemParams& params, const ChannelRealization& channel, Rng& rng,
                             const std::vector<Scheme>& schemes) {
    const PairingMetrics metrics = pairing_metrics(params, channel);
    const bool direct = params.direct_path;
    SchemeRates out;
    for (Scheme s : schemes) {
        switch (s) {
        case Scheme::OptimalSp:
            out[s] = rate_pairing(sorted_pairing(metrics, direct), metrics, direct).total_bits;
            break;
        case Scheme::NoSp:
            out[s] = rate_pairing(Permutation::identity(metrics.size()), metrics, direct).total_bits;
            break;
        case Scheme::RandomUnitary:
            out[s] = rate_general(haar_random(params.n_subcarriers, rng).matrix(), params, channel);
            break;
        case Scheme::SpIgnoreDirect:
            out[s] = rate_pairing(sorted_pairing(metrics, false), metrics, direct).total_bits;
            break;
        }
    }
    return out;
}

void parallel_for(int count, unsigned threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double pairwise_sum(const double* values, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += values[i];
        return s;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

Geometry place_relay(const Geometry& base, double ratio) {
    Geometry g = base;
    g.d_sr = ratio * base.d_sd / (1.0 + ratio);
    g.d_rd = base.d_sd / (1.0 + ratio);
    return g;
}

namespace {

// Runs `trials` realizations at one operating point; per_trial[t][s] is the per-subcarrier
// rate of schemes[s].
void run_point(const ScenarioConfig& config, const Geometry& geometry, double snr_db, std::uint64_t sweep_index,
               const ExecutionOptions& exec, std::vector<SweepRow>& rows, double sweep_value) {
    const int n = config.n_subcarriers;
    const SystemParams params = power_from_snr(snr_db, geometry, n, config.direct_path);
    std::vector<Scheme> schemes = config.schemes;
    std::sort(schemes.begin(), schemes.end());
    schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

    const auto n_schemes = schemes.size();
    std::vector<double> samples(n_schemes * static_cast<std::size_t>(config.trials));
    parallel_for(config.trials, exec.threads, [&](int t) {
        Rng rng(substream_seed(config.master_seed, {sweep_index, static_cast<std::uint64_t>(t)}));
        const ChannelRealization channel = generate_channel(geometry, params, rng);
        const SchemeRates rates = evaluate_schemes(params, channel, rng, schemes);
        for (std::size_t s = 0; s < n_schemes; ++s)
            samples[s * static_cast<std::size_t>(config.trials) + static_cast<std::size_t>(t)] =
                rates.at(schemes[s]) / n;
    });

    const auto trials = static_cast<std::size_t>(config.trials);
    for (std::size_t s = 0; s < n_schemes; ++s) {
        const double* x = samples.data() + s * trials;
        const double mean = pairwise_sum(x, trials) / static_cast<double>(trials);
        double std_error = 0.0;
        if (trials > 1) {
            std::vector<double> dev(trials);
            for (std::size_t t = 0; t < trials; ++t) dev[t] = (x[t] - mean) * (x[t] - mean);
            const double var = pairwise_sum(dev.data(), trials) / static_cast<double>(trials - 1);
            std_error = std::sqrt(var / static_cast<double>(trials));
        }
        rows.push_back({sweep_value, schemes[s], mean, std_error, config.trials});
    }
}

void sort_rows(SweepResult& result) {
    std::stable_sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
        return scheme_name(a.scheme) < scheme_name(b.scheme);
    });
}

} // namespace

SweepResult run_snr_sweep(const ScenarioConfig& config, const ExecutionOptions& exec) {
    config.validate(ScenarioConfig::Sweep::Snr);
    SweepResult result;
    for (std::size_t k = 0; k < config.snr_db_list.size(); ++k) {
        const double snr = config.snr_db_list[k];
        run_point(config, config.geometry, snr, k, exec, result.rows, snr);
    }
    sort_rows(result);
    return result;
}

SweepResult run_position_sweep(const ScenarioConfig& config, const ExecutionOptions& exec) {
    config.validate(ScenarioConfig::Sweep::Position);
    SweepResult result;
    for (std::size_t k = 0; k < config.position_ratio_list.size(); ++k) {
        const double ratio = config.position_ratio_list[k];
        const Geometry geometry = place_relay(config.geometry, ratio);
        geometry.validate(config.n_subcarriers);
        run_point(config, geometry, config.snr_db_fixed, k, exec, result.rows, ratio);
    }
    sort_rows(result);
    return result;
}

VerificationInstance random_verification_instance(int n, bool direct_path, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_real_distribution<double> snr_dist(0.0, 20.0);
    const double snr_db = snr_dist(rng);
    Geometry geometry;
    geometry.taps_per_link = std::min(n, 11);
    VerificationInstance inst;
    inst.params = power_from_snr(snr_db, geometry, n, direct_path);
    inst.channel = generate_channel(geometry, inst.params, rng);
    return inst;
}

} // namespace relaylab

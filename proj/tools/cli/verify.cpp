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

#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <sstream>

#include <Eigen/LU>

#include "relaylab/experiments.hpp"
#include "relaylab/pairing.hpp"
#include "relaylab/rate.hpp"
#include "relaylab/unitary.hpp"

namespace relaylab::cli {

namespace {

// FNV-1a over the raw channel and parameter bytes, for replay bookkeeping.
std::uint64_t digest(const SystemParams& params, const ChannelRealization& channel) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const void* data, std::size_t bytes) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t k = 0; k < bytes; ++k) {
            h ^= p[k];
            h *= 0x100000001b3ULL;
        }
    };
    feed(&params.p_s, sizeof(double));
    feed(&params.p_r, sizeof(double));
    feed(params.d_s.data(), sizeof(double) * static_cast<std::size_t>(params.d_s.size()));
    for (const auto* v : {&channel.h0, &channel.h1, &channel.h2})
        feed(v->data(), sizeof(Complex) * static_cast<std::size_t>(v->size()));
    return h;
}

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

struct TrialOutcome {
    int checks = 0;
    std::vector<std::string> failures;
};

VerifyReport collect(const std::vector<TrialOutcome>& outcomes) {
    VerifyReport report;
    for (const auto& o : outcomes) {
        report.checks += o.checks;
        report.failures += static_cast<int>(o.failures.size());
        report.failure_details.insert(report.failure_details.end(), o.failures.begin(), o.failures.end());
    }
    return report;
}

std::string replay(const char* command, const VerifyOptions& o, int trial, bool direct, std::uint64_t inst,
                   std::uint64_t dig) {
    std::ostringstream os;
    os << "trial=" << trial << " direct=" << (direct ? 1 : 0) << " instance_seed=" << hex(inst)
       << " channel_digest=" << hex(dig) << " replay: relaylab verify " << command << " --n " << o.n
       << " --seed " << o.seed << " --trials " << (trial + 1);
    if (std::strcmp(command, "theorem") == 0) os << " --restarts " << o.restarts;
    return os.str();
}

} // namespace

std::uint64_t instance_seed(std::uint64_t seed, int n, int trial, bool direct) {
    return substream_seed(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial), direct ? 1u : 0u});
}

VerifyReport verify_lemma(const VerifyOptions& o) {
    const double tol = o.tol < 0 ? 1e-9 : o.tol;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(o.trials) * 2);
    parallel_for(o.trials * 2, o.threads, [&](int idx) {
        const int trial = idx / 2;
        const bool direct = idx % 2 == 1;
        const std::uint64_t inst = instance_seed(o.seed, o.n, trial, direct);
        const auto instance = random_verification_instance(o.n, direct, inst);
        const PairingMetrics metrics = pairing_metrics(instance.params, instance.channel);
        const double sorted = rate_pairing(sorted_pairing(metrics, direct), metrics, direct).total_bits;
        const double brute = brute_force_pairing(metrics, direct, o.oracle_limit).total_bits;
        const double assigned = rate_pairing(assignment_pairing(metrics, direct), metrics, direct).total_bits;
        auto& out = outcomes[static_cast<std::size_t>(idx)];
        out.checks = 2;
        const auto dig = digest(instance.params, instance.channel);
        if (rel_diff(sorted, brute) > tol) {
            std::ostringstream os;
            os << "sorted " << sorted << " != brute-force " << brute << "; " << replay("lemma", o, trial, direct, inst, dig);
            out.failures.push_back(os.str());
        }
        if (rel_diff(sorted, assigned) > tol) {
            std::ostringstream os;
            os << "sorted " << sorted << " != assignment " << assigned << "; "
               << replay("lemma", o, trial, direct, inst, dig);
            out.failures.push_back(os.str());
        }
    });
    return collect(outcomes);
}

VerifyReport verify_theorem(const VerifyOptions& o) {
    const double upper_slack = o.tol < 0 ? 1e-6 : o.tol;
    const double reach_tol = o.n == 2 ? 1e-4 : 1e-3;
    constexpr double kStationarityTol = 1e-6;
    constexpr int kDirections = 20;

    AscentOptions ascent;
    ascent.max_sweeps = o.max_sweeps;
    ascent.tol = o.ascent_tol;

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(o.trials) * 2);
    parallel_for(o.trials * 2, o.threads, [&](int idx) {
        const int trial = idx / 2;
        const bool direct = idx % 2 == 1;
        const std::uint64_t inst = instance_seed(o.seed, o.n, trial, direct);
        const auto instance = random_verification_instance(o.n, direct, inst);
        const auto& params = instance.params;
        const auto& channel = instance.channel;
        const PairingMetrics metrics = pairing_metrics(params, channel);
        const Permutation best_perm = sorted_pairing(metrics, direct);
        const double optimum = rate_pairing(best_perm, metrics, direct).total_bits;
        const auto dig = digest(params, channel);
        auto& out = outcomes[static_cast<std::size_t>(idx)];

        double best = -1.0;
        for (int r = 0; r < o.restarts; ++r) {
            Rng rng(substream_seed(inst, {0x5eedULL, static_cast<std::uint64_t>(r)}));
            const UnitaryMatrix start = haar_random(o.n, rng);
            const AscentResult result = ascend_rate(params, channel, start.matrix(), ascent);
            best = std::max(best, result.rate);
            ++out.checks;
            if (result.rate > optimum + upper_slack) {
                std::ostringstream os;
                os.precision(17);
                os << "restart " << r << " ascent rate " << result.rate << " exceeds sorted pairing " << optimum << "; "
                   << replay("theorem", o, trial, direct, inst, dig);
                out.failures.push_back(os.str());
            }
        }
        ++out.checks;
        if (optimum - best > reach_tol) {
            std::ostringstream os;
            os.precision(17);
            os << "best restart " << best << " short of sorted pairing " << optimum << "; "
               << replay("theorem", o, trial, direct, inst, dig);
            out.failures.push_back(os.str());
        }

        const Eigen::MatrixXcd w_star = best_perm.matrix();
        Rng dir_rng(substream_seed(inst, {0xd1ecULL}));
        for (int k = 0; k < kDirections; ++k) {
            const Eigen::MatrixXcd s = random_skew_hermitian(o.n, dir_rng);
            const double dd = directional_derivative(w_star, s, params, channel, 1e-4);
            ++out.checks;
            if (std::abs(dd) > kStationarityTol) {
                std::ostringstream os;
                os << "directional derivative " << dd << " at sorted pairing (direction " << k << "); "
                   << replay("theorem", o, trial, direct, inst, dig);
                out.failures.push_back(os.str());
            }
        }
    });
    return collect(outcomes);
}

VerifyReport verify_bound(const VerifyOptions& o) {
    const double eq_tol = o.tol < 0 ? 1e-12 : o.tol;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(o.trials));
    parallel_for(o.trials, o.threads, [&](int t) {
        Rng rng(substream_seed(o.seed, {0xb0d5ULL, static_cast<std::uint64_t>(t)}));
        std::uniform_int_distribution<int> size_dist(1, o.n);
        std::uniform_real_distribution<double> log_mag(-2.0, 2.0);
        std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
        const int m = size_dist(rng);
        Eigen::VectorXcd p(m), q(m);
        for (int k = 0; k < m; ++k) {
            const double mp = std::exp(log_mag(rng));
            const double ap = phase(rng);
            p[k] = std::polar(mp, ap);
            const double mq = std::exp(log_mag(rng));
            const double aq = phase(rng);
            q[k] = std::polar(mq, aq);
        }
        const UnitaryMatrix w = haar_random(m, rng);
        auto& out = outcomes[static_cast<std::size_t>(t)];
        out.checks = 2;
        if (!psd_det_bound_check(GramMatrix::from_factors(p, w.matrix(), q))) {
            std::ostringstream os;
            os << "bound violated for Gram matrix of size " << m << "; trial=" << t
               << " replay: relaylab verify bound --n " << o.n << " --seed " << o.seed << " --trials " << (t + 1);
            out.failures.push_back(os.str());
        }
        // Diagonal case must meet the bound with equality.
        const Eigen::VectorXd diag = p.cwiseAbs2().cwiseProduct(q.cwiseAbs2());
        const Eigen::MatrixXcd a = diag.cast<Complex>().asDiagonal();
        const double full = (Eigen::MatrixXcd::Identity(m, m) + a).determinant().real();
        const double lead = m > 1 ? (Eigen::MatrixXcd::Identity(m - 1, m - 1) + a.topLeftCorner(m - 1, m - 1))
                                        .determinant()
                                        .real()
                                  : 1.0;
        const double rhs = (1.0 + diag[m - 1]) * lead;
        if (!psd_det_bound_check(GramMatrix(a)) || std::abs(full - rhs) > eq_tol * std::max(1.0, full)) {
            std::ostringstream os;
            os << "diagonal equality failed: " << full << " vs " << rhs << "; trial=" << t
               << " replay: relaylab verify bound --n " << o.n << " --seed " << o.seed << " --trials " << (t + 1);
            out.failures.push_back(os.str());
        }
    });
    return collect(outcomes);
}

} // namespace relaylab::cli

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

#include "cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/verify.hpp"
#include "relaylab/experiments.hpp"
#include "relaylab/pairing.hpp"
#include "relaylab/rate.hpp"

namespace relaylab::cli {

namespace {

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

unsigned worker_threads() { return threads_from_env().value_or(0); }

struct PairArgs {
    std::string config;
    bool direct = false;
    std::string out;
};

int cmd_pair(const PairArgs& args, std::ostream& out) {
    const CliConfig cfg = load_config(args.config);
    CliConfig effective = cfg;
    if (args.direct) effective.scenario.direct_path = true;
    const auto& sc = effective.scenario;
    const SystemParams params = pair_params(effective);

    ChannelRealization channel;
    if (effective.channel) {
        channel = *effective.channel;
        if (!params.direct_path) channel.h0.setZero();
    } else {
        try {
            sc.geometry.validate(sc.n_subcarriers);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config.geometry: ") + e.what());
        }
        Rng rng(substream_seed(sc.master_seed, {0}));
        channel = generate_channel(sc.geometry, params, rng);
    }

    const bool direct = params.direct_path;
    const PairingMetrics metrics = pairing_metrics(params, channel);
    const Permutation perm = sorted_pairing(metrics, direct);
    const RateBreakdown rate = rate_pairing(perm, metrics, direct);
    const double per_subcarrier = rate.total_bits / sc.n_subcarriers;

    out << "optimal subcarrier pairing (" << (direct ? "with" : "without") << " direct path), N = "
        << sc.n_subcarriers << "\n";
    out << std::setw(8) << "input" << std::setw(8) << "output" << std::setw(16) << "relay_sinr" << std::setw(16)
        << "direct_snr" << std::setw(14) << "bits" << "\n";
    out << std::setprecision(6);
    for (const auto& p : rate.per_pair) {
        out << std::setw(8) << p.input + 1 << std::setw(8) << p.output + 1 << std::setw(16) << p.sinr
            << std::setw(16) << (direct ? metrics.snr_sd[p.input] : 0.0) << std::setw(14) << p.bits << "\n";
    }
    out << std::setprecision(10);
    out << "map = [";
    for (int i = 0; i < perm.size(); ++i) out << (i ? ", " : "") << perm[i] + 1;
    out << "]\n";
    out << "total_bits = " << rate.total_bits << "\n";
    out << "rate_per_subcarrier = " << per_subcarrier << "\n";

    // Sweep configs carry a CSV `output`, so the JSON lands at --out or <config stem>.pair.json.
    const std::string json_path =
        !args.out.empty() ? args.out : std::filesystem::path(args.config).stem().string() + ".pair.json";
    {
        nlohmann::ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["n_subcarriers"] = sc.n_subcarriers;
        doc["direct_path"] = direct;
        std::vector<int> map;
        for (int v : perm.map()) map.push_back(v + 1);
        doc["map"] = map;
        doc["relay_gain"] = metrics.d_r;
        auto pairs = nlohmann::ordered_json::array();
        for (const auto& p : rate.per_pair) {
            pairs.push_back({{"input", p.input + 1}, {"output", p.output + 1}, {"sinr", p.sinr}, {"bits", p.bits}});
        }
        doc["pairs"] = pairs;
        doc["total_bits"] = rate.total_bits;
        doc["rate_per_subcarrier"] = per_subcarrier;
        write_file(json_path, doc.dump(2) + "\n");
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string which;
    VerifyOptions options;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    VerifyOptions o = args.options;
    o.threads = worker_threads();
    if (o.n < 1 || o.trials < 1 || o.restarts < 1) {
        err << "error: --n, --trials and --restarts must be >= 1\n";
        return kExitUsage;
    }
    VerifyReport report;
    if (args.which == "lemma") {
        if (o.n > o.oracle_limit) {
            err << "error: --n " << o.n << " exceeds the enumeration limit " << o.oracle_limit << "\n";
            return kExitUsage;
        }
        report = verify_lemma(o);
    } else if (args.which == "theorem") {
        if (o.n < 2 || o.n > 16) {
            err << "error: theorem verification needs 2 <= --n <= 16\n";
            return kExitUsage;
        }
        report = verify_theorem(o);
    } else {
        report = verify_bound(o);
    }
    out << args.which << ": n=" << o.n << " trials=" << o.trials << " seed=" << o.seed << " checks=" << report.checks
        << " passed=" << report.checks - report.failures << " failed=" << report.failures << "\n";
    for (const auto& line : report.failure_details) out << "FAIL " << line << "\n";
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

struct SweepArgs {
    std::string which;
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::vector<double> values;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg = load_config(args.config);
    auto& sc = cfg.scenario;
    if (args.seed) sc.master_seed = *args.seed;
    if (args.trials) sc.trials = *args.trials;
    const bool snr = args.which == "snr";
    if (!args.values.empty()) (snr ? sc.snr_db_list : sc.position_ratio_list) = args.values;

    const std::string path = !args.out.empty() ? args.out : cfg.output.value_or("");
    if (path.empty()) {
        err << "error: no output path (use --out or the config 'output' field)\n";
        return kExitUsage;
    }
    try {
        sc.validate(snr ? ScenarioConfig::Sweep::Snr : ScenarioConfig::Sweep::Position);
    } catch (const std::exception& e) {
        throw ConfigError(args.config + ": " + e.what());
    }
    const ExecutionOptions exec{worker_threads()};
    const SweepResult result = snr ? run_snr_sweep(sc, exec) : run_position_sweep(sc, exec);
    write_file(path, to_csv(result));
    out << "wrote " << result.rows.size() << " rows to " << path << "\n";
    return kExitOk;
}

} // namespace

std::optional<unsigned> threads_from_env() {
    const char* raw = std::getenv("RELAYLAB_THREADS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1) throw std::invalid_argument("RELAYLAB_THREADS must be a positive integer");
    return static_cast<unsigned>(value);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"relaylab: optimal unitary processing and subcarrier pairing for AF OFDM relays", "relaylab"};
    app.require_subcommand(1);

    PairArgs pair_args;
    auto* pair = app.add_subcommand("pair", "Optimal pairing for one seeded (or explicit) channel");
    pair->add_option("config", pair_args.config, "JSON config file")->required();
    pair->add_flag("--direct", pair_args.direct, "Use the direct source-destination path");
    pair->add_option("--out", pair_args.out, "JSON result path (default: <config stem>.pair.json)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Numerical optimality checks");
    verify->require_subcommand(1);
    for (const char* name : {"lemma", "theorem", "bound"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--n", verify_args.options.n, "Subcarrier count / matrix size")->capture_default_str();
        sub->add_option("--trials", verify_args.options.trials, "Random instances")->capture_default_str();
        sub->add_option("--restarts", verify_args.options.restarts, "Haar restarts per instance")
            ->capture_default_str();
        sub->add_option("--seed", verify_args.options.seed, "Master seed")->capture_default_str();
        sub->add_option("--tol", verify_args.options.tol, "Tolerance override");
        sub->add_option("--limit", verify_args.options.oracle_limit, "Enumeration size limit")->capture_default_str();
        sub->callback([&verify_args, name] { verify_args.which = name; });
    }

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo scheme comparison, CSV output");
    sweep->require_subcommand(1);
    for (const char* name : {"snr", "position"}) {
        auto* sub = sweep->add_subcommand(name);
        sub->add_option("config", sweep_args.config, "JSON config file")->required();
        sub->add_option("--out", sweep_args.out, "CSV output path");
        sub->add_option("--seed", sweep_args.seed, "Override master_seed");
        sub->add_option("--trials", sweep_args.trials, "Override trials");
        sub->add_option("--values", sweep_args.values, "Override the sweep axis values");
        sub->callback([&sweep_args, name] { sweep_args.which = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (pair->parsed()) return cmd_pair(pair_args, out);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
        if (sweep->parsed()) return cmd_sweep(sweep_args, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace relaylab::cli

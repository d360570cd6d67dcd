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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "relaylab/channel.hpp"
#include "relaylab/experiments.hpp"

namespace relaylab::cli {

inline constexpr int kSchemaVersion = 1;

/// Malformed or invalid configuration (exit code 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Filesystem failure (exit code 3).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Explicit operating point, overriding the SNR-derived one in `pair`.
struct ExplicitSystem {
    double sigma_r2 = 1.0;
    double sigma_d2 = 1.0;
    double p_s = 1.0;
    double p_r = 1.0;
    std::optional<Eigen::VectorXd> d_s; // equal allocation when absent
};

struct CliConfig {
    int schema_version = kSchemaVersion;
    ScenarioConfig scenario;
    std::optional<std::string> output;
    int oracle_limit = 9;
    int restarts = 8;
    int max_sweeps = 200;
    double ascent_tol = 1e-9;
    std::optional<ExplicitSystem> system;
    std::optional<ChannelRealization> channel;
};

/// Parses a JSON configuration document. Unknown keys are rejected.
CliConfig parse_config(std::string_view json_text);

/// Reads and parses a file. IoError if unreadable, ConfigError if invalid.
CliConfig load_config(const std::filesystem::path& path);

/// Parameters the `pair` command runs with.
SystemParams pair_params(const CliConfig& config);

} // namespace relaylab::cli

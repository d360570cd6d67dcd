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

#include "cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace relaylab::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get_field(const json& obj, const std::string& key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

template <typename T>
void read_optional(const json& obj, const std::string& key, const std::string& where, T& target) {
    if (obj.contains(key)) target = get_field<T>(obj, key, where);
}

Eigen::VectorXcd parse_gains(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ConfigError(where + ": expected an array of gains");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& g = arr[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        if (g.is_number()) {
            v[static_cast<Eigen::Index>(k)] = g.get<double>();
        } else if (g.is_array() && g.size() == 2 && g[0].is_number() && g[1].is_number()) {
            v[static_cast<Eigen::Index>(k)] = Complex(g[0].get<double>(), g[1].get<double>());
        } else {
            throw ConfigError(at + ": gain must be a number or [re, im]");
        }
    }
    return v;
}

} // namespace

CliConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");

    reject_unknown(doc,
                   {"schema_version", "n_subcarriers", "taps_per_link", "trials", "master_seed", "geometry",
                    "snr_db_list", "position_ratio_list", "snr_db_fixed", "schemes", "direct_path", "output",
                    "oracle_limit", "restarts", "max_sweeps", "ascent_tol", "system", "channel"},
                   "config");
    if (!doc.contains("schema_version")) throw ConfigError("config.schema_version: required field missing");

    CliConfig cfg;
    cfg.schema_version = get_field<int>(doc, "schema_version", "config");
    if (cfg.schema_version != kSchemaVersion)
        throw ConfigError("config.schema_version: unsupported version " + std::to_string(cfg.schema_version));

    auto& sc = cfg.scenario;
    read_optional(doc, "n_subcarriers", "config", sc.n_subcarriers);
    read_optional(doc, "taps_per_link", "config", sc.geometry.taps_per_link);
    read_optional(doc, "trials", "config", sc.trials);
    read_optional(doc, "master_seed", "config", sc.master_seed);
    read_optional(doc, "snr_db_list", "config", sc.snr_db_list);
    read_optional(doc, "position_ratio_list", "config", sc.position_ratio_list);
    read_optional(doc, "snr_db_fixed", "config", sc.snr_db_fixed);
    read_optional(doc, "direct_path", "config", sc.direct_path);
    read_optional(doc, "oracle_limit", "config", cfg.oracle_limit);
    read_optional(doc, "restarts", "config", cfg.restarts);
    read_optional(doc, "max_sweeps", "config", cfg.max_sweeps);
    read_optional(doc, "ascent_tol", "config", cfg.ascent_tol);
    if (doc.contains("output")) cfg.output = get_field<std::string>(doc, "output", "config");

    if (doc.contains("geometry")) {
        const json& g = doc["geometry"];
        if (!g.is_object()) throw ConfigError("config.geometry: expected an object");
        reject_unknown(g, {"d_sd", "d_sr", "d_rd", "pathloss_exp"}, "config.geometry");
        read_optional(g, "d_sd", "config.geometry", sc.geometry.d_sd);
        read_optional(g, "d_sr", "config.geometry", sc.geometry.d_sr);
        read_optional(g, "d_rd", "config.geometry", sc.geometry.d_rd);
        read_optional(g, "pathloss_exp", "config.geometry", sc.geometry.pathloss_exp);
    }

    if (doc.contains("schemes")) {
        const auto names = get_field<std::vector<std::string>>(doc, "schemes", "config");
        sc.schemes.clear();
        for (const auto& name : names) {
            const auto s = parse_scheme(name);
            if (!s) throw ConfigError("config.schemes: unknown scheme '" + name + "'");
            sc.schemes.push_back(*s);
        }
    }

    if (doc.contains("system")) {
        const json& s = doc["system"];
        if (!s.is_object()) throw ConfigError("config.system: expected an object");
        reject_unknown(s, {"sigma_r2", "sigma_d2", "p_s", "p_r", "d_s"}, "config.system");
        ExplicitSystem sys;
        read_optional(s, "sigma_r2", "config.system", sys.sigma_r2);
        read_optional(s, "sigma_d2", "config.system", sys.sigma_d2);
        read_optional(s, "p_s", "config.system", sys.p_s);
        read_optional(s, "p_r", "config.system", sys.p_r);
        if (s.contains("d_s")) {
            const auto ds = get_field<std::vector<double>>(s, "d_s", "config.system");
            sys.d_s = Eigen::Map<const Eigen::VectorXd>(ds.data(), static_cast<Eigen::Index>(ds.size()));
        }
        cfg.system = sys;
    }

    if (doc.contains("channel")) {
        const json& c = doc["channel"];
        if (!c.is_object()) throw ConfigError("config.channel: expected an object");
        reject_unknown(c, {"h0", "h1", "h2"}, "config.channel");
        if (!c.contains("h1") || !c.contains("h2")) throw ConfigError("config.channel: h1 and h2 are required");
        ChannelRealization ch;
        ch.h1 = parse_gains(c["h1"], "config.channel.h1");
        ch.h2 = parse_gains(c["h2"], "config.channel.h2");
        ch.h0 = c.contains("h0") ? parse_gains(c["h0"], "config.channel.h0") : Eigen::VectorXcd::Zero(ch.h1.size());
        if (ch.h1.size() != sc.n_subcarriers || ch.h2.size() != sc.n_subcarriers || ch.h0.size() != sc.n_subcarriers)
            throw ConfigError("config.channel: every gain vector must have n_subcarriers = " +
                              std::to_string(sc.n_subcarriers) + " entries");
        cfg.channel = ch;
    }

    if (sc.n_subcarriers < 1) throw ConfigError("config.n_subcarriers: must be >= 1");
    if (sc.trials < 1) throw ConfigError("config.trials: must be >= 1");
    if (cfg.oracle_limit < 1) throw ConfigError("config.oracle_limit: must be >= 1");
    if (cfg.restarts < 1) throw ConfigError("config.restarts: must be >= 1");
    if (cfg.max_sweeps < 1) throw ConfigError("config.max_sweeps: must be >= 1");
    if (!(cfg.ascent_tol > 0.0)) throw ConfigError("config.ascent_tol: must be > 0");
    if (sc.schemes.empty()) throw ConfigError("config.schemes: must be non-empty");
    return cfg;
}

CliConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading config file '" + path.string() + "'");
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

SystemParams pair_params(const CliConfig& config) {
    const auto& sc = config.scenario;
    SystemParams params;
    if (config.system) {
        const auto& s = *config.system;
        params = SystemParams::equal_power(sc.n_subcarriers, s.p_s, s.p_r, s.sigma_r2, s.sigma_d2, sc.direct_path);
        if (s.d_s) params.d_s = *s.d_s;
    } else {
        params = power_from_snr(sc.snr_db_fixed, sc.geometry, sc.n_subcarriers, sc.direct_path);
    }
    try {
        params.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config.system: ") + e.what());
    }
    return params;
}

} // namespace relaylab::cli

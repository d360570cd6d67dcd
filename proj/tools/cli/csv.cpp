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

#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace relaylab::cli {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("failed to format double");
    return std::string(buf.data(), end);
}

std::string to_csv(const SweepResult& result) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& row : result.rows) {
        out += format_double(row.sweep_value);
        out += ',';
        out += scheme_name(row.scheme);
        out += ',';
        out += format_double(row.mean_rate_per_subcarrier);
        out += ',';
        out += format_double(row.std_error);
        out += ',';
        out += std::to_string(row.trials);
        out += '\n';
    }
    return out;
}

namespace {

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
    return value;
}

} // namespace

SweepResult parse_csv(std::string_view text) {
    SweepResult result;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line_no == 1) {
            if (line != kCsvHeader) throw std::runtime_error("line 1: unexpected header");
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (fields.size() != 5) throw std::runtime_error("line " + std::to_string(line_no) + ": expected 5 fields");
        const auto scheme = parse_scheme(fields[1]);
        if (!scheme) throw std::runtime_error("line " + std::to_string(line_no) + ": unknown scheme");
        result.rows.push_back({parse_number<double>(fields[0], line_no), *scheme,
                               parse_number<double>(fields[2], line_no), parse_number<double>(fields[3], line_no),
                               parse_number<int>(fields[4], line_no)});
    }
    if (line_no == 0) throw std::runtime_error("empty CSV");
    return result;
}

} // namespace relaylab::cli

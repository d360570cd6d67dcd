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

#include <string>
#include <string_view>

#include "relaylab/experiments.hpp"

namespace relaylab::cli {

inline constexpr std::string_view kCsvHeader = "sweep_value,scheme,mean_rate_per_subcarrier,std_error,trials";

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Header plus one LF-terminated row per SweepRow, in the order given.
std::string to_csv(const SweepResult& result);

/// Inverse of to_csv. Throws std::runtime_error with the offending line number.
SweepResult parse_csv(std::string_view text);

} // namespace relaylab::cli

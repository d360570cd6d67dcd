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

#include <optional>
#include <ostream>

namespace relaylab::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Entry point of the `relaylab` executable.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Worker cap from RELAYLAB_THREADS; nullopt when unset. Throws std::invalid_argument on
/// a non-positive or non-numeric value.
std::optional<unsigned> threads_from_env();

} // namespace relaylab::cli

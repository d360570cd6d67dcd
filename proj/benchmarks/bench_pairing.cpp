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

#include <benchmark/benchmark.h>

#include "relaylab/relaylab.hpp"

using namespace relaylab;

static void BM_SortedPairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 21);
    const auto m = pairing_metrics(inst.params, inst.channel);
    for (auto _ : state) benchmark::DoNotOptimize(sorted_pairing(m, true));
}
BENCHMARK(BM_SortedPairing)->RangeMultiplier(4)->Range(4, 4096);

static void BM_AssignmentPairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 22);
    const auto m = pairing_metrics(inst.params, inst.channel);
    for (auto _ : state) benchmark::DoNotOptimize(assignment_pairing(m, true));
}
BENCHMARK(BM_AssignmentPairing)->RangeMultiplier(4)->Range(4, 256);

static void BM_BruteForcePairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 23);
    const auto m = pairing_metrics(inst.params, inst.channel);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_pairing(m, true).total_bits);
}
BENCHMARK(BM_BruteForcePairing)->DenseRange(4, 8, 2);

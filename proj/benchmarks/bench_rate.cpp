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

static void BM_RateGeneral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 11);
    Rng rng(5);
    const auto w = haar_random(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rate_general(w, inst.params, inst.channel));
}
BENCHMARK(BM_RateGeneral)->RangeMultiplier(2)->Range(2, 128);

static void BM_RatePairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 12);
    const auto m = pairing_metrics(inst.params, inst.channel);
    const auto perm = sorted_pairing(m, true);
    for (auto _ : state) benchmark::DoNotOptimize(rate_pairing(perm, m, true).total_bits);
}
BENCHMARK(BM_RatePairing)->RangeMultiplier(4)->Range(4, 1024);

static void BM_GenerateChannel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto params = SystemParams::equal_power(n, 1.0, 1.0, 1.0, 1.0, true);
    Rng rng(13);
    for (auto _ : state) benchmark::DoNotOptimize(generate_channel(Geometry{}, params, rng));
}
BENCHMARK(BM_GenerateChannel)->Arg(128)->Arg(512);

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

static void BM_HaarRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(31);
    for (auto _ : state) benchmark::DoNotOptimize(haar_random(n, rng));
}
BENCHMARK(BM_HaarRandom)->RangeMultiplier(4)->Range(2, 128);

static void BM_AscendRate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto inst = random_verification_instance(n, true, 32);
    Rng rng(33);
    const auto start = haar_random(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ascend_rate(inst.params, inst.channel, start).rate);
}
BENCHMARK(BM_AscendRate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

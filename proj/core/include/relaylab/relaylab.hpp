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

#include "relaylab/channel.hpp"
#include "relaylab/errors.hpp"
#include "relaylab/experiments.hpp"
#include "relaylab/pairing.hpp"
#include "relaylab/permutation.hpp"
#include "relaylab/random.hpp"
#include "relaylab/rate.hpp"
#include "relaylab/unitary.hpp"

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

#include <stdexcept>
#include <string>

namespace relaylab {

// All library errors derive from std::invalid_argument or std::runtime_error so
// callers may catch by the standard base class.

class InvalidParamsError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidTapProfileError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidPermutationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidDirectionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class InvalidMatrixError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class SizeLimitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix that must be unitary is not; carries ||W W^H - I||_F.
class UnitarityError : public std::invalid_argument {
  public:
    explicit UnitarityError(double residual)
        : std::invalid_argument("matrix is not unitary: ||W W^H - I||_F = " + std::to_string(residual)),
          residual_(residual) {}

    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

} // namespace relaylab

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

#include <vector>

#include <Eigen/Core>

#include "relaylab/channel.hpp"
#include "relaylab/random.hpp"

namespace relaylab {

/// Square matrix with ||W W^H - I||_F <= tolerance, checked at construction.
class UnitaryMatrix {
  public:
    static constexpr double kTolerance = 1e-10;

    /// Throws UnitarityError if the residual exceeds `tol`.
    explicit UnitaryMatrix(Eigen::MatrixXcd entries, double tol = kTolerance);

    static UnitaryMatrix identity(int n);

    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
    operator const Eigen::MatrixXcd&() const noexcept { return entries_; }

  private:
    Eigen::MatrixXcd entries_;
};

/// Hermitian positive semidefinite Gram matrix A = (P W Q)^H (P W Q).
class GramMatrix {
  public:
    /// Throws InvalidMatrixError unless `a` is Hermitian to 1e-12 (relative to its
    /// scale) with all eigenvalues >= -1e-10.
    explicit GramMatrix(Eigen::MatrixXcd a);

    /// Builds (P W Q)^H (P W Q) from diagonal entries p, q.
    static GramMatrix from_factors(const Eigen::VectorXcd& p, const Eigen::MatrixXcd& w, const Eigen::VectorXcd& q);

    int size() const noexcept { return static_cast<int>(a_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return a_; }

  private:
    Eigen::MatrixXcd a_;
};

/// Haar-distributed sample from U(n): QR of a complex Ginibre matrix with the
/// column phases fixed so that R has a positive real diagonal.
UnitaryMatrix haar_random(int n, Rng& rng);

/// diag(e^{i phi1}, e^{i phi2}) * [[cos t, -sin t], [sin t, cos t]] * diag(1, e^{i phi3}).
UnitaryMatrix unitary_2x2(double theta, double phi1, double phi2, double phi3);

/// Identity of size n with the 2x2 block `block` placed on coordinates (i, j).
Eigen::MatrixXcd embed_block(int n, int i, int j, const Eigen::Matrix2cd& block);

/// exp(S) for skew-Hermitian S via the eigendecomposition of the Hermitian iS.
Eigen::MatrixXcd expm_skew_hermitian(const Eigen::MatrixXcd& s);

struct AscentOptions {
    int max_sweeps = 200;
    double tol = 1e-9;
    int grid_theta = 64;
    int grid_phi = 64;
    int refine_iterations = 20;
};

struct AscentResult {
    UnitaryMatrix w;
    double rate;
    std::vector<double> sweep_rates; // rate after each completed sweep, starting with the initial rate
    int sweeps = 0;
};

/// Block-coordinate ascent of rate_general over U(N) by Givens-type sweeps.
///
/// For each pair (i, j) the current W is right-multiplied by an embedded 2x2 unitary
/// diag(1, e^{i phi}) R(theta). The block is chosen by a grid over
/// [0, pi) x [0, 2 pi) and refined by golden-section search per axis; the move is kept
/// only if the full rate improves. Stops after a sweep that gains less than `tol`.
///
/// Throws UnitarityError if `start` is not unitary to kRateUnitarityTol.
AscentResult ascend_rate(const SystemParams& params, const ChannelRealization& channel,
                         const Eigen::MatrixXcd& start, const AscentOptions& options = {});

AscentResult ascend_rate(const SystemParams& params, const ChannelRealization& channel,
                         const UnitaryMatrix& start, int max_sweeps, double tol);

/// Central difference [C(W exp(eps S)) - C(W exp(-eps S))] / (2 eps).
/// Throws InvalidDirectionError unless S^H = -S to 1e-10, or eps is outside (0, 1e-2].
double directional_derivative(const Eigen::MatrixXcd& w, const Eigen::MatrixXcd& s, const SystemParams& params,
                              const ChannelRealization& channel, double eps = 1e-4);

/// Skew-Hermitian generators of a Givens rotation on (i, j): real E_ij - E_ji, or
/// imaginary i(E_ij + E_ji).
Eigen::MatrixXcd givens_direction(int n, int i, int j, bool imaginary);

/// Random skew-Hermitian direction with unit Frobenius norm.
Eigen::MatrixXcd random_skew_hermitian(int n, Rng& rng);

/// det(I + A) <= (1 + A_nn) det(I + A_{n-1}) + 1e-12 max(1, det(I + A)),
/// A_{n-1} being the leading (n-1)x(n-1) principal block.
bool psd_det_bound_check(const GramMatrix& a);

} // namespace relaylab

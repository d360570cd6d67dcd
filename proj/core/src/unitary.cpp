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

#include "relaylab/unitary.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "relaylab/errors.hpp"
#include "relaylab/rate.hpp"

namespace relaylab {

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw InvalidMatrixError("unitary matrix must be square");
    const double residual = unitarity_residual(entries_);
    if (!(residual <= tol)) throw UnitarityError(residual);
}

UnitaryMatrix UnitaryMatrix::identity(int n) { return UnitaryMatrix(Eigen::MatrixXcd::Identity(n, n)); }

GramMatrix::GramMatrix(Eigen::MatrixXcd a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw InvalidMatrixError("Gram matrix must be square");
    if (!a_.allFinite()) throw InvalidMatrixError("Gram matrix must be finite");
    const double scale = std::max(1.0, a_.norm());
    const double asym = (a_ - a_.adjoint()).norm();
    if (asym > 1e-12 * scale)
        throw InvalidMatrixError("Gram matrix is not Hermitian: ||A - A^H||_F = " + std::to_string(asym));
    if (a_.rows() == 0) return;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a_, Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues().minCoeff();
    if (min_eig < -1e-10 * scale)
        throw InvalidMatrixError("Gram matrix is not positive semidefinite: min eigenvalue " +
                                 std::to_string(min_eig));
}

GramMatrix GramMatrix::from_factors(const Eigen::VectorXcd& p, const Eigen::MatrixXcd& w, const Eigen::VectorXcd& q) {
    const Eigen::MatrixXcd pwq = p.asDiagonal() * w * q.asDiagonal();
    Eigen::MatrixXcd a = pwq.adjoint() * pwq;
    // Symmetrize away rounding so the Hermitian check sees exact structure.
    a = 0.5 * (a + a.adjoint()).eval();
    return GramMatrix(std::move(a));
}

UnitaryMatrix haar_random(int n, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = {re, im};
        }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (int k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        // Q R = Q L L^-1 R with L = diag(d/|d|) makes the new R diagonal real positive.
        if (mag > 0.0) q.col(k) *= d / mag;
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix unitary_2x2(double theta, double phi1, double phi2, double phi3) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e1 = std::polar(1.0, phi1);
    const Complex e2 = std::polar(1.0, phi2);
    const Complex e3 = std::polar(1.0, phi3);
    Eigen::MatrixXcd w(2, 2);
    w << e1 * c, -e1 * s * e3, e2 * s, e2 * c * e3;
    return UnitaryMatrix(std::move(w));
}

Eigen::MatrixXcd embed_block(int n, int i, int j, const Eigen::Matrix2cd& block) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(n, n);
    g(i, i) = block(0, 0);
    g(i, j) = block(0, 1);
    g(j, i) = block(1, 0);
    g(j, j) = block(1, 1);
    return g;
}

Eigen::MatrixXcd expm_skew_hermitian(const Eigen::MatrixXcd& s) {
    const Complex imag_unit{0.0, 1.0};
    // H = iS is Hermitian, S = -iH, exp(S) = V exp(-i Lambda) V^H.
    Eigen::MatrixXcd h = imag_unit * s;
    h = 0.5 * (h + h.adjoint()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
    const Eigen::VectorXcd phases =
        eig.eigenvalues().unaryExpr([](double lambda) { return std::polar(1.0, -lambda); });
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double directional_derivative(const Eigen::MatrixXcd& w, const Eigen::MatrixXcd& s, const SystemParams& params,
                              const ChannelRealization& channel, double eps) {
    if (s.rows() != s.cols() || s.rows() != w.rows())
        throw InvalidDirectionError("direction must be square and match W");
    const double skew = (s + s.adjoint()).norm();
    if (skew > 1e-10) throw InvalidDirectionError("direction is not skew-Hermitian: ||S + S^H||_F = " + std::to_string(skew));
    if (!(eps > 0.0 && eps <= 1e-2)) throw InvalidDirectionError("eps must lie in (0, 1e-2]");
    if (s.norm() == 0.0) return 0.0;
    const Eigen::MatrixXcd forward = w * expm_skew_hermitian(eps * s);
    const Eigen::MatrixXcd backward = w * expm_skew_hermitian(-eps * s);
    return (rate_general(forward, params, channel) - rate_general(backward, params, channel)) / (2.0 * eps);
}

Eigen::MatrixXcd givens_direction(int n, int i, int j, bool imaginary) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    if (imaginary) {
        s(i, j) = Complex(0.0, 1.0);
        s(j, i) = Complex(0.0, 1.0);
    } else {
        s(i, j) = 1.0;
        s(j, i) = -1.0;
    }
    return s;
}

Eigen::MatrixXcd random_skew_hermitian(int n, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = {re, im};
        }
    Eigen::MatrixXcd s = 0.5 * (g - g.adjoint());
    const double norm = s.norm();
    return norm > 0.0 ? Eigen::MatrixXcd(s / norm) : s;
}

bool psd_det_bound_check(const GramMatrix& gram) {
    const Eigen::MatrixXcd& a = gram.matrix();
    const int n = gram.size();
    if (n == 0) return true;
    const Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(n, n) + a;
    const double det_full = full.determinant().real();
    const double det_lead =
        n > 1 ? (Eigen::MatrixXcd::Identity(n - 1, n - 1) + a.topLeftCorner(n - 1, n - 1)).determinant().real() : 1.0;
    const double bound = (1.0 + a(n - 1, n - 1).real()) * det_lead;
    return det_full <= bound + 1e-12 * std::max(1.0, det_full);
}

} // namespace relaylab

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

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>

#include "relaylab/errors.hpp"
#include "relaylab/rate.hpp"
#include "relaylab/unitary.hpp"

namespace relaylab {

namespace {

constexpr double kGolden = 0.6180339887498949;

Eigen::Matrix2cd block_matrix(double theta, double phi) {
    // unitary_2x2(theta, 0, phi, 0): right phases drop out of the rate, left ones do not.
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e = std::polar(1.0, phi);
    Eigen::Matrix2cd g;
    g << c, -s, e * s, e * c;
    return g;
}

// Restriction of log det(I + Y0^H Y0 + B^H B) to moves W -> W G(i, j). By the Schur
// complement on the rest-of-indices block R,
//
//   det M(W G) = det M_RR * det(E_S + D^H g^H K g D)
//
// where M_RR does not depend on g, D = diag(y1_i, y1_j) and K is a fixed 2x2 Hermitian
// matrix. Evaluating one block candidate is then O(1).
class BlockObjective {
  public:
    BlockObjective(const Eigen::MatrixXcd& w, const Eigen::VectorXcd& y2, const Eigen::VectorXcd& y1,
                   const Eigen::VectorXd& diag_e, int i, int j) {
        const auto n = static_cast<int>(w.rows());
        Eigen::MatrixXcd x(n, 2);
        x.col(0) = y2.cwiseProduct(w.col(i));
        x.col(1) = y2.cwiseProduct(w.col(j));
        k_ = x.adjoint() * x;
        if (n > 2) {
            Eigen::MatrixXcd b_rest(n, n - 2);
            Eigen::VectorXd e_rest(n - 2);
            for (int c = 0, r = 0; c < n; ++c) {
                if (c == i || c == j) continue;
                b_rest.col(r) = y2.cwiseProduct(w.col(c)) * y1[c];
                e_rest[r] = diag_e[c];
                ++r;
            }
            Eigen::MatrixXcd m_rr = b_rest.adjoint() * b_rest;
            m_rr.diagonal().real() += e_rest;
            const Eigen::MatrixXcd t = b_rest.adjoint() * x;
            const Eigen::LLT<Eigen::MatrixXcd> llt(m_rr);
            k_ -= t.adjoint() * llt.solve(t);
        }
        k_ = 0.5 * (k_ + k_.adjoint()).eval();
        d_ << y1[i], y1[j];
        e_ << diag_e[i], diag_e[j];
    }

    double log_det(double theta, double phi) const {
        return std::log(det(std::cos(theta), std::sin(theta), std::polar(1.0, phi)));
    }

    // det(E_S + D^H g^H K g D) for g = [[c, -s], [e s, e c]].
    double det(double c, double s, Complex e) const {
        const Complex g00 = c * d_[0];
        const Complex g10 = e * s * d_[0];
        const Complex g01 = -s * d_[1];
        const Complex g11 = e * c * d_[1];
        // K g, column by column.
        const Complex kg00 = k_(0, 0) * g00 + k_(0, 1) * g10;
        const Complex kg10 = k_(1, 0) * g00 + k_(1, 1) * g10;
        const Complex kg01 = k_(0, 0) * g01 + k_(0, 1) * g11;
        const Complex kg11 = k_(1, 0) * g01 + k_(1, 1) * g11;
        const double a = e_[0] + (std::conj(g00) * kg00 + std::conj(g10) * kg10).real();
        const double b = e_[1] + (std::conj(g01) * kg01 + std::conj(g11) * kg11).real();
        const Complex off = std::conj(g00) * kg01 + std::conj(g10) * kg11;
        return a * b - std::norm(off);
    }

  private:
    Eigen::Matrix2cd k_;
    Eigen::Vector2cd d_;
    Eigen::Vector2d e_;
};

template <typename F>
double golden_maximize(F&& f, double lo, double hi, int iterations) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < iterations; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = f(x1);
        }
    }
    return f1 < f2 ? x2 : x1;
}

} // namespace

AscentResult ascend_rate(const SystemParams& params, const ChannelRealization& channel,
                         const Eigen::MatrixXcd& start, const AscentOptions& options) {
    const int n = params.n_subcarriers;
    channel.validate(n);
    if (start.rows() != n || start.cols() != n) throw InvalidMatrixError("start matrix has wrong dimensions");
    if (!(options.tol > 0.0)) throw std::invalid_argument("ascent tolerance must be > 0");
    const double residual = unitarity_residual(start);
    if (!(residual <= kRateUnitarityTol)) throw UnitarityError(residual);

    const double d_r = derive_relay_gain(params, channel.h1);
    const Eigen::VectorXcd relayed = channel.h2 * d_r;
    const Eigen::ArrayXd rn = params.sigma_r2 * relayed.array().abs2() + params.sigma_d2;
    const Eigen::VectorXcd y2 = relayed.array() / rn.sqrt().cast<Complex>();
    const Eigen::VectorXcd y1 = channel.h1.array() * params.d_s.array().cast<Complex>();
    Eigen::VectorXd diag_e = Eigen::VectorXd::Ones(n);
    if (params.direct_path) diag_e.array() += channel.h0.array().abs2() * params.d_s.array().square() / params.sigma_d2;

    Eigen::MatrixXcd w = start;
    double rate = rate_general(w, params, channel);
    std::vector<double> history{rate};
    int sweeps = 0;

    const double theta_step = std::numbers::pi / options.grid_theta;
    const double phi_step = 2.0 * std::numbers::pi / options.grid_phi;
    std::vector<double> grid_cos(static_cast<std::size_t>(options.grid_theta));
    std::vector<double> grid_sin(grid_cos.size());
    std::vector<Complex> grid_phase(static_cast<std::size_t>(options.grid_phi));
    for (std::size_t a = 0; a < grid_cos.size(); ++a) {
        grid_cos[a] = std::cos(static_cast<double>(a) * theta_step);
        grid_sin[a] = std::sin(static_cast<double>(a) * theta_step);
    }
    for (std::size_t b = 0; b < grid_phase.size(); ++b)
        grid_phase[b] = std::polar(1.0, static_cast<double>(b) * phi_step);

    while (sweeps < options.max_sweeps && n > 1) {
        const double sweep_start = rate;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const BlockObjective objective(w, y2, y1, diag_e, i, j);
                double best_theta = 0.0;
                double best_phi = 0.0;
                // Grid on det directly; log is monotone.
                double best = objective.det(1.0, 0.0, 1.0);
                for (int a = 0; a < options.grid_theta; ++a) {
                    for (int b = 0; b < options.grid_phi; ++b) {
                        const double value = objective.det(grid_cos[static_cast<std::size_t>(a)],
                                                           grid_sin[static_cast<std::size_t>(a)],
                                                           grid_phase[static_cast<std::size_t>(b)]);
                        if (value > best) {
                            best = value;
                            best_theta = a * theta_step;
                            best_phi = b * phi_step;
                        }
                    }
                }
                best_theta = golden_maximize([&](double t) { return objective.log_det(t, best_phi); },
                                             best_theta - theta_step, best_theta + theta_step,
                                             options.refine_iterations);
                best_phi = golden_maximize([&](double p) { return objective.log_det(best_theta, p); },
                                           best_phi - phi_step, best_phi + phi_step, options.refine_iterations);

                Eigen::MatrixXcd candidate = w;
                const Eigen::Matrix2cd g = block_matrix(best_theta, best_phi);
                candidate.col(i) = w.col(i) * g(0, 0) + w.col(j) * g(1, 0);
                candidate.col(j) = w.col(i) * g(0, 1) + w.col(j) * g(1, 1);
                const double candidate_rate = rate_general(candidate, params, channel);
                if (candidate_rate > rate) {
                    w = std::move(candidate);
                    rate = candidate_rate;
                }
            }
        }
        ++sweeps;
        history.push_back(rate);
        if (rate - sweep_start < options.tol) break;
    }

    return AscentResult{UnitaryMatrix(std::move(w), kRateUnitarityTol), rate, std::move(history), sweeps};
}

AscentResult ascend_rate(const SystemParams& params, const ChannelRealization& channel,
                         const UnitaryMatrix& start, int max_sweeps, double tol) {
    AscentOptions options;
    options.max_sweeps = max_sweeps;
    options.tol = tol;
    return ascend_rate(params, channel, start.matrix(), options);
}

} // namespace relaylab

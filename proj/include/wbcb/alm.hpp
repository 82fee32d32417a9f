// SPDX-License-Identifier: Apache-2.0
//
// wbcb - wideband analog beamforming codebook design
// Copyright (C) 2026 The wbcb authors
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

#ifndef WBCB_ALM_HPP
#define WBCB_ALM_HPP

#include "wbcb/array_model.hpp"

#include <vector>

#include <Eigen/Cholesky>

namespace wbcb
{
    struct SolverConfig
    {
        double rho1 = 1.0;
        double rho2 = 1.0;
        double beta1 = 1e-3;
        double beta2 = 1e-3;
        int n_ite = 50;
        double eps = 0.0; // stop once the primal residual is <= eps

        void validate() const;
    };

    // Composite-domain samples x_m = -dw/2 + m dw/(M-1), m = 0..M-1, and S(:,m) = h(x_m).
    struct SolverGrid
    {
        std::vector<double> points;
        cmat S; // N x M
    };

    SolverGrid build_grid(int elements, double delta_omega, int points);

    struct IterationRecord
    {
        double residual = 0.0; // ||y - sqrt(N) r + S^H w||_2
        double min_gain = 0.0; // min_m |S(:,m)^H x|^2
    };

    /*!MD
    # SolverState
    Iterates of the splitting scheme. `w` is the relaxed beam, `x` its constant-modulus copy,
    `y` the slack with `y = sqrt(N) r - S^H w`, `r` unit-modulus phases, `u_bar` and
    `lambda_bar` the scaled multipliers.
    MD!*/
    struct SolverState
    {
        cmat S;
        cvec w, x, y, r, u_bar, lambda_bar;
        std::vector<IterationRecord> history;

        int elements() const { return static_cast<int>(S.rows()); }
        int points() const { return static_cast<int>(S.cols()); }
    };

    // Initial state: w = x = init, r = exp(j arg(S^H w)), zero slack and multipliers.
    SolverState make_state(const SolverGrid &grid, const BeamVector &init);

    // Factorization of rho1 S S^H + rho2 I, computed once per solve.
    struct WSystem
    {
        double rho1 = 1.0;
        double rho2 = 1.0;
        Eigen::LLT<cmat> llt;
    };

    WSystem factor_w_system(const cmat &S, double rho1, double rho2);

    void update_y(SolverState &state, double rho1);
    void update_w(SolverState &state, const WSystem &system);
    void update_w(SolverState &state, double rho1, double rho2);
    void update_x(SolverState &state);
    void update_r(SolverState &state);
    void update_duals(SolverState &state, double beta1, double beta2);

    double primal_residual(const SolverState &state);

    // min_m |S(:,m)^H v|^2
    double min_grid_gain(const cmat &S, const cvec &v);

    struct SolveResult
    {
        BeamVector beam;
        double min_gain = 0.0;   // min grid gain of `beam`
        int best_iteration = 0;  // 0 means the initializer was kept
        std::vector<IterationRecord> history;
    };

    // Runs the y, w, x, r, dual updates and returns the feasible iterate with the largest
    // min grid gain (the initializer included).
    SolveResult solve(const SystemConfig &cfg, const SolverConfig &solver, double delta_omega, const BeamVector &init);
}

#endif

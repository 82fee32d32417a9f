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

#include "wbcb/alm.hpp"
#include "wbcb/errors.hpp"

#include <cmath>

namespace wbcb
{
    namespace
    {
        cplx unit_phase(cplx v)
        {
            if (v.real() == 0.0 && v.imag() == 0.0)
                return {1.0, 0.0};
            return std::polar(1.0, std::arg(v));
        }

        double sqrt_n(const SolverState &s) { return std::sqrt(static_cast<double>(s.elements())); }
    }

    void SolverConfig::validate() const
    {
        if (!(rho1 > 0.0) || !(rho2 > 0.0) || !std::isfinite(rho1) || !std::isfinite(rho2))
            throw config_error("rho1 and rho2 must be positive");
        if (!(beta1 > 0.0) || !(beta2 > 0.0) || !std::isfinite(beta1) || !std::isfinite(beta2))
            throw config_error("beta1 and beta2 must be positive");
        if (n_ite < 1)
            throw config_error("n_ite must be at least 1");
        if (!(eps >= 0.0) || !std::isfinite(eps))
            throw config_error("eps must be non-negative");
    }

    SolverGrid build_grid(int elements, double delta_omega, int points)
    {
        if (elements < 1)
            throw config_error("elements must be at least 1");
        if (points < 2)
            throw config_error("solver grid needs at least 2 points");
        if (!std::isfinite(delta_omega) || delta_omega < 0.0)
            throw config_error("delta_omega must be non-negative and finite");

        SolverGrid g;
        g.points.resize(static_cast<std::size_t>(points));
        for (int m = 0; m < points; ++m)
            g.points[static_cast<std::size_t>(m)] =
                -delta_omega / 2.0 + static_cast<double>(m) * delta_omega / static_cast<double>(points - 1);
        g.points.back() = delta_omega / 2.0;

        g.S.resize(elements, points);
        for (int m = 0; m < points; ++m)
            g.S.col(m) = steering_composite(elements, g.points[static_cast<std::size_t>(m)]).entries;
        return g;
    }

    SolverState make_state(const SolverGrid &grid, const BeamVector &init)
    {
        if (init.size() != grid.S.rows())
            throw config_error("initial beam length does not match the solver grid");
        SolverState s;
        s.S = grid.S;
        s.w = init.weights();
        s.x = init.weights();
        const cvec proj = s.S.adjoint() * s.w;
        s.r.resize(proj.size());
        for (Eigen::Index m = 0; m < proj.size(); ++m)
            s.r(m) = unit_phase(proj(m));
        s.y = cvec::Zero(s.S.cols());
        s.u_bar = cvec::Zero(s.S.cols());
        s.lambda_bar = cvec::Zero(s.S.rows());
        return s;
    }

    WSystem factor_w_system(const cmat &S, double rho1, double rho2)
    {
        WSystem sys;
        sys.rho1 = rho1;
        sys.rho2 = rho2;
        cmat a = rho1 * (S * S.adjoint());
        a.diagonal().array() += rho2;
        sys.llt.compute(a);
        if (sys.llt.info() != Eigen::Success)
            throw solver_error("w-update system is not positive definite");
        return sys;
    }

    void update_y(SolverState &s, double rho1)
    {
        const cvec c = sqrt_n(s) * s.r - s.S.adjoint() * s.w - s.u_bar;
        const double m = static_cast<double>(c.size());
        const double alpha = std::max((rho1 * c.cwiseAbs().sum() - 1.0) / (m * rho1), 0.0);
        s.y.resize(c.size());
        for (Eigen::Index i = 0; i < c.size(); ++i)
        {
            const double mag = std::abs(c(i));
            s.y(i) = (mag <= alpha) ? c(i) : alpha * unit_phase(c(i));
        }
    }

    void update_w(SolverState &s, const WSystem &sys)
    {
        const cvec rhs = sys.rho1 * (s.S * (sqrt_n(s) * s.r - s.u_bar - s.y)) + sys.rho2 * (s.x - s.lambda_bar);
        s.w = sys.llt.solve(rhs);
        if (!s.w.allFinite())
            throw solver_error("w-update produced non-finite values");
    }

    void update_w(SolverState &s, double rho1, double rho2)
    {
        update_w(s, factor_w_system(s.S, rho1, rho2));
    }

    void update_x(SolverState &s)
    {
        const double scale = 1.0 / sqrt_n(s);
        for (Eigen::Index i = 0; i < s.x.size(); ++i)
            s.x(i) = scale * unit_phase(s.w(i) + s.lambda_bar(i));
    }

    void update_r(SolverState &s)
    {
        const cvec proj = s.S.adjoint() * s.w;
        for (Eigen::Index m = 0; m < s.r.size(); ++m)
            s.r(m) = unit_phase(s.y(m) + proj(m) + s.u_bar(m));
    }

    void update_duals(SolverState &s, double beta1, double beta2)
    {
        const cvec primal = s.y - sqrt_n(s) * s.r + s.S.adjoint() * s.w;
        s.u_bar += beta1 * primal;
        s.lambda_bar += beta2 * (s.w - s.x);
    }

    double primal_residual(const SolverState &s)
    {
        return (s.y - sqrt_n(s) * s.r + s.S.adjoint() * s.w).norm();
    }

    double min_grid_gain(const cmat &S, const cvec &v)
    {
        return (S.adjoint() * v).cwiseAbs2().minCoeff();
    }

    SolveResult solve(const SystemConfig &cfg, const SolverConfig &solver, double delta_omega, const BeamVector &init)
    {
        cfg.validate();
        solver.validate();
        if (init.size() != cfg.elements)
            throw config_error("initial beam length does not match the element count");

        const SolverGrid grid = build_grid(cfg.elements, delta_omega, cfg.solver_points);
        SolverState state = make_state(grid, init);
        const WSystem sys = factor_w_system(state.S, solver.rho1, solver.rho2);

        SolveResult out;
        out.beam = init;
        out.min_gain = min_grid_gain(state.S, init.weights());
        out.best_iteration = 0;

        for (int it = 1; it <= solver.n_ite; ++it)
        {
            update_y(state, solver.rho1);
            update_w(state, sys);
            update_x(state);
            update_r(state);
            const double residual = primal_residual(state);
            update_duals(state, solver.beta1, solver.beta2);

            const double g = min_grid_gain(state.S, state.x);
            state.history.push_back({residual, g});
            if (g > out.min_gain)
            {
                out.beam = BeamVector::project(state.x);
                out.min_gain = min_grid_gain(state.S, out.beam.weights());
                out.best_iteration = it;
            }
            if (residual <= solver.eps)
                break;
        }
        out.history = std::move(state.history);
        return out;
    }
}

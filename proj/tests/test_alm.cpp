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

#include <doctest.h>

#include "oracles.hpp"
#include "wbcb/alm.hpp"
#include "wbcb/prv.hpp"
#include "wbcb/zones.hpp"

#include <cmath>
#include <random>

using namespace wbcb;

namespace
{
    cvec random_cvec(std::mt19937_64 &rng, Eigen::Index n, double scale = 1.0)
    {
        cvec v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = cplx(oracle::uniform(rng, -scale, scale), oracle::uniform(rng, -scale, scale));
        return v;
    }

    // State with every block filled by random values.
    SolverState random_state(std::mt19937_64 &rng, int n, double width, int m)
    {
        std::vector<double> ph(static_cast<std::size_t>(n));
        for (auto &p : ph)
            p = oracle::uniform(rng, -pi, pi);
        SolverState s = make_state(build_grid(n, width, m), BeamVector::from_phases(ph));
        s.w = random_cvec(rng, n);
        s.y = random_cvec(rng, m);
        s.u_bar = random_cvec(rng, m, 0.3);
        s.lambda_bar = random_cvec(rng, n, 0.3);
        for (Eigen::Index i = 0; i < s.r.size(); ++i)
            s.r(i) = std::polar(1.0, oracle::uniform(rng, -pi, pi));
        return s;
    }

    // w-dependent part of the augmented Lagrangian.
    double w_objective(const SolverState &s, const cvec &w, double rho1, double rho2)
    {
        const double rn = std::sqrt(static_cast<double>(s.elements()));
        const cvec a = s.y - rn * s.r + s.S.adjoint() * w + s.u_bar;
        const cvec b = w - s.x + s.lambda_bar;
        return 0.5 * rho1 * a.squaredNorm() + 0.5 * rho2 * b.squaredNorm();
    }

    SystemConfig scenario(int n, int l) { return SystemConfig::make(140e9, 10e9, n, l); }
}

TEST_SUITE("alm")
{
    TEST_CASE("solver config")
    {
        CHECK_NOTHROW(SolverConfig{}.validate());
        SolverConfig c;
        c.rho1 = 0.0;
        CHECK_THROWS(c.validate());
        c = {};
        c.beta2 = -1.0;
        CHECK_THROWS(c.validate());
        c = {};
        c.n_ite = 0;
        CHECK_THROWS(c.validate());
        c = {};
        c.eps = -1e-3;
        CHECK_THROWS(c.validate());
    }

    TEST_CASE("grid")
    {
        const SolverGrid two = build_grid(4, 0.5, 2);
        CHECK(two.points == std::vector<double>{-0.25, 0.25});
        const SolverGrid three = build_grid(4, 0.5, 3);
        CHECK(three.points[1] == 0.0);
        const SolverGrid g = build_grid(9, 0.3, 18);
        for (int m = 0; m < 18; ++m)
        {
            CHECK(g.S.col(m).squaredNorm() == doctest::Approx(9.0).epsilon(1e-14));
            const auto col = steering_composite(9, g.points[static_cast<std::size_t>(m)]).entries;
            CHECK((g.S.col(m) - col).norm() == 0.0);
        }
        CHECK_THROWS(build_grid(4, 0.5, 1));
    }

    TEST_CASE("y update")
    {
        SolverState s = make_state(build_grid(1, 0.0, 2), BeamVector::from_phases(std::vector<double>{0.0}));
        // sqrt(N) r - S^H w - u_bar = c with r, w chosen so that S^H w = 0.
        s.w = cvec::Zero(1);
        s.u_bar = cvec::Zero(2);
        s.r(0) = cplx(1.0, 0.0);
        s.r(1) = cplx(0.0, 1.0);
        s.u_bar(0) = cplx(-1.0, 0.0);
        s.u_bar(1) = cplx(0.0, -1.0);
        update_y(s, 1.0);
        CHECK(std::abs(s.y(0) - cplx(1.5, 0.0)) <= 1e-15);
        CHECK(std::abs(s.y(1) - cplx(0.0, 1.5)) <= 1e-15);

        s.r(0) = 0.0;
        s.r(1) = 0.0;
        s.u_bar.setZero();
        update_y(s, 1.0);
        CHECK(s.y.norm() == 0.0);

        // Equal huge magnitudes are all clipped to the same alpha below them.
        std::mt19937_64 rng(4);
        SolverState big = random_state(rng, 6, 0.4, 12);
        cvec c(12);
        for (Eigen::Index i = 0; i < 12; ++i)
            c(i) = std::polar(1e3, oracle::uniform(rng, -pi, pi));
        big.u_bar = std::sqrt(6.0) * big.r - big.S.adjoint() * big.w - c;
        update_y(big, 1.0);
        CHECK(std::abs(big.y(0)) == doctest::Approx((12e3 - 1.0) / 12.0).epsilon(1e-12));
        for (Eigen::Index i = 1; i < big.y.size(); ++i)
            CHECK(std::abs(big.y(i)) == doctest::Approx(std::abs(big.y(0))).epsilon(1e-12));
    }

    TEST_CASE("w update solves the stationarity system")
    {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 10; ++t)
        {
            const int n = 4 + static_cast<int>(rng() % 20);
            const double rho1 = oracle::uniform(rng, 0.2, 3.0), rho2 = oracle::uniform(rng, 0.2, 3.0);
            SolverState s = random_state(rng, n, oracle::uniform(rng, 0.05, 1.5), 2 * n);
            update_w(s, rho1, rho2);

            cmat a = rho1 * s.S * s.S.adjoint();
            a.diagonal().array() += rho2;
            const double rn = std::sqrt(static_cast<double>(n));
            const cvec rhs = rho1 * s.S * (rn * s.r - s.u_bar - s.y) + rho2 * (s.x - s.lambda_bar);
            CHECK((a * s.w - rhs).norm() <= 1e-10 * rhs.norm());

            const double h = 1e-5;
            for (int k = 0; k < 8; ++k)
            {
                const Eigen::Index i = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
                const cplx dir = (k % 2 == 0) ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
                cvec plus = s.w, minus = s.w;
                plus(i) += h * dir;
                minus(i) -= h * dir;
                const double d = (w_objective(s, plus, rho1, rho2) - w_objective(s, minus, rho1, rho2)) / (2.0 * h);
                CHECK(std::abs(d) <= 1e-6);
            }
        }
    }

    TEST_CASE("w update in the decoupled limit")
    {
        std::mt19937_64 rng(12);
        SolverState s = random_state(rng, 8, 0.3, 16);
        update_w(s, 1e-14, 1.0);
        CHECK((s.w - (s.x - s.lambda_bar)).norm() <= 1e-10);
    }

    TEST_CASE("x and r projections")
    {
        std::mt19937_64 rng(15);
        SolverState s = random_state(rng, 6, 0.3, 12);
        s.w = cvec::Constant(6, cplx(2.0, 0.0));
        s.lambda_bar.setZero();
        update_x(s);
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(s.x(i) - cplx(1.0 / std::sqrt(6.0), 0.0)) <= 1e-15);

        s.w = s.x;
        const cvec before = s.x;
        update_x(s);
        CHECK((s.x - before).norm() <= 1e-15);

        s.w.setZero();
        update_x(s);
        CHECK(s.x(0) == cplx(1.0 / std::sqrt(6.0), 0.0));

        s = random_state(rng, 6, 0.3, 12);
        update_x(s);
        const cvec v = s.w + s.lambda_bar;
        const double best = (s.x - v).norm();
        for (int t = 0; t < 10000; ++t)
        {
            cvec c(6);
            for (int i = 0; i < 6; ++i)
                c(i) = std::polar(1.0 / std::sqrt(6.0), oracle::uniform(rng, -pi, pi));
            REQUIRE(best <= (c - v).norm() + 1e-15);
        }

        update_r(s);
        for (Eigen::Index m = 0; m < s.r.size(); ++m)
            CHECK(std::abs(std::abs(s.r(m)) - 1.0) <= 1e-15);
        const cvec target = s.y + s.S.adjoint() * s.w + s.u_bar;
        for (Eigen::Index m = 0; m < s.r.size(); ++m)
            CHECK(std::abs(std::remainder(std::arg(s.r(m)) - std::arg(target(m)), 2.0 * pi)) <= 1e-14);
    }

    TEST_CASE("dual ascent")
    {
        std::mt19937_64 rng(16);
        SolverState s = random_state(rng, 5, 0.2, 10);
        const cvec u0 = s.u_bar, l0 = s.lambda_bar;
        const double rn = std::sqrt(5.0);
        const cvec primal = s.y - rn * s.r + s.S.adjoint() * s.w;
        update_duals(s, 0.0, 0.0);
        CHECK((s.u_bar - u0).norm() == 0.0);
        CHECK((s.lambda_bar - l0).norm() == 0.0);

        s.u_bar.setZero();
        s.lambda_bar.setZero();
        update_duals(s, 0.25, 0.5);
        CHECK((s.u_bar - 0.25 * primal).norm() <= 1e-14);
        CHECK((s.lambda_bar - 0.5 * (s.w - s.x)).norm() <= 1e-14);
        CHECK(primal_residual(s) == doctest::Approx(primal.norm()).epsilon(1e-14));

        // Zero residuals leave the multipliers untouched.
        s.x = s.w;
        s.y = rn * s.r - s.S.adjoint() * s.w;
        const cvec u1 = s.u_bar, l1 = s.lambda_bar;
        update_duals(s, 0.25, 0.5);
        CHECK((s.u_bar - u1).norm() <= 1e-14);
        CHECK((s.lambda_bar - l1).norm() == 0.0);
    }

    TEST_CASE("solve on small cases")
    {
        const SolverConfig solver;
        const SystemConfig one = SystemConfig::make(140e9, 10e9, 1, 2);
        const SolveResult r1 = solve(one, solver, 0.7, BeamVector::from_phases(std::vector<double>{0.3}));
        CHECK(r1.min_gain == doctest::Approx(1.0).epsilon(1e-14));

        const SystemConfig cfg = scenario(16, 32);
        const SolveResult narrow = solve(cfg, solver, 1e-6, prv_beam(prv_plan(16, 1e-6)));
        CHECK(narrow.min_gain >= 0.98 * oracle::aligned_closed_form(140e9, 0.0, 16, 0.0, 0.0));
    }

    TEST_CASE("solve on the acceptance scenarios")
    {
        const SolverConfig solver;
        for (const auto [n, l] : {std::pair{16, 32}, std::pair{32, 64}})
        {
            CAPTURE(n);
            const SystemConfig cfg = scenario(n, l);
            const double w = divide_zones(cfg).delta_omega;
            const BeamVector init = prv_beam(prv_plan(n, w));
            const SolveResult r = solve(cfg, solver, w, init);
            const SolverGrid g = build_grid(n, w, cfg.solver_points);

            CHECK(r.min_gain >= min_grid_gain(g.S, init.weights()));
            CHECK(r.min_gain == min_grid_gain(g.S, r.beam.weights()));
            CHECK(r.min_gain <= n);
            CHECK(r.min_gain <= 1.02 * 2.0 / w);
            for (int i = 0; i < n; ++i)
                CHECK(std::abs(std::abs(r.beam[i]) - 1.0 / std::sqrt(static_cast<double>(n))) <= 1e-12);

            REQUIRE(r.history.size() == static_cast<std::size_t>(solver.n_ite));
            CHECK(r.history.back().residual <= r.history.front().residual);

            const cvec center = cvec::Constant(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
            CHECK(r.min_gain >= min_grid_gain(g.S, center));

            const SolveResult again = solve(cfg, solver, w, init);
            CHECK(again.best_iteration == r.best_iteration);
            CHECK((again.beam.weights() - r.beam.weights()).norm() == 0.0);
            for (std::size_t i = 0; i < r.history.size(); ++i)
                CHECK(again.history[i].residual == r.history[i].residual);
        }
    }

    TEST_CASE("residual threshold stops early")
    {
        const SystemConfig cfg = scenario(8, 16);
        SolverConfig solver;
        solver.eps = 1e9;
        const SolveResult r = solve(cfg, solver, 0.2, prv_beam(prv_plan(8, 0.2)));
        CHECK(r.history.size() == 1);
    }
}

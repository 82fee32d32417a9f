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
#include "wbcb/codebook.hpp"
#include "wbcb/narrowband.hpp"

#include <cmath>
#include <random>

using namespace wbcb;

TEST_SUITE("narrowband")
{
    TEST_CASE("codebook centres")
    {
        const Codebook two = narrowband_codebook(SystemConfig::make(140e9, 10e9, 8, 2));
        REQUIRE(two.size() == 2);
        const auto expect_lo = oracle::matched(8, -0.5), expect_hi = oracle::matched(8, 0.5);
        for (int i = 0; i < 8; ++i)
        {
            CHECK(std::abs(two.beams[0][i] - expect_lo[static_cast<std::size_t>(i)]) <= 1e-14);
            CHECK(std::abs(two.beams[1][i] - expect_hi[static_cast<std::size_t>(i)]) <= 1e-14);
        }

        const Codebook one = narrowband_codebook(SystemConfig::make(140e9, 10e9, 8, 1));
        for (int i = 0; i < 8; ++i)
            CHECK(std::abs(one.beams[0][i] - std::sqrt(0.125)) <= 1e-15);

        const Codebook l32 = narrowband_codebook(SystemConfig::make(140e9, 10e9, 4, 32));
        const double s1 = 1.0 / 32.0 - 1.0;
        CHECK(std::arg(l32.beams[0][1]) == doctest::Approx(std::remainder(pi * s1, 2 * pi)).epsilon(1e-13));
        CHECK(l32.partition.boundaries.front() == -pi / 2.0);
        CHECK(l32.partition.boundaries.back() == pi / 2.0);
        CHECK(l32.partition.delta_omega == 1.0 / 16.0);
        CHECK(l32.provenance.kind == "narrowband");
    }

    TEST_CASE("B = 0 worst case")
    {
        CHECK(narrowband_worst_case_b0(SystemConfig::make(140e9, 0.0, 1, 5)) == doctest::Approx(1.0));
        for (const int n : {4, 16, 33})
            CHECK(narrowband_worst_case_b0(SystemConfig::make(140e9, 0.0, n, n)) ==
                  doctest::Approx(1.0 / (n * std::pow(std::sin(pi / (2.0 * n)), 2))).epsilon(1e-13));

        const SystemConfig cfg = SystemConfig::make(140e9, 0.0, 16, 200);
        const double v = narrowband_worst_case_b0(cfg);
        CHECK(v == doctest::Approx(15.92).epsilon(1e-3));
        CHECK(v == doctest::Approx(oracle::narrowband_b0(16, 200)).epsilon(1e-13));

        SystemConfig sweep_cfg = cfg;
        sweep_cfg.angle_points = 2048;
        sweep_cfg.freq_points = 2;
        const double grid = evaluate(sweep_cfg, narrowband_codebook(sweep_cfg)).worst_case;
        CHECK(std::abs(grid - v) <= 0.01 * v);
    }

    TEST_CASE("closed-form wideband worst case")
    {
        for (const int n : {1, 8, 16, 40})
        {
            const SystemConfig b0 = SystemConfig::make(140e9, 0.0, n, 64);
            CHECK(prop1_worst_case(b0).worst_case_gain == doctest::Approx(narrowband_worst_case_b0(b0)).epsilon(1e-14));
        }

        const SystemConfig cfg = SystemConfig::make(140e9, 10e9, 16, 200);
        const auto a = prop1_worst_case(cfg);
        CHECK(a.nonzero_condition_holds);
        CHECK(a.worst_aod == pi / 2.0);
        CHECK(a.worst_case_gain == doctest::Approx(11.17).epsilon(2e-3));
        CHECK(a.worst_case_gain == doctest::Approx(oracle::narrowband_closed_form(140e9, 10e9, 16, 200)).epsilon(1e-13));

        SystemConfig sweep_cfg = cfg;
        sweep_cfg.angle_points = 2048;
        const double grid = evaluate(sweep_cfg, narrowband_codebook(sweep_cfg)).worst_case;
        CHECK(std::abs(grid - a.worst_case_gain) <= 0.02 * a.worst_case_gain);

        // N at or beyond the limit 4 f_c L / (2 f_c + B L) gives zero.
        const int limit = static_cast<int>(std::ceil(4.0 * 140e9 * 200 / (2.0 * 140e9 + 10e9 * 200)));
        const auto z = prop1_worst_case(SystemConfig::make(140e9, 10e9, limit, 200));
        CHECK_FALSE(z.nonzero_condition_holds);
        CHECK(z.worst_case_gain == 0.0);
        CHECK(prop1_max_elements(140e9, 10e9, 200) == limit - 1);
    }

    TEST_CASE("monotone in B and L")
    {
        for (const int n : {8, 16, 32})
        {
            double prev = 1e300;
            for (double b = 0.0; b <= 40e9; b += 1e9)
            {
                const double g = prop1_worst_case(SystemConfig::make(140e9, b, n, 64)).worst_case_gain;
                CHECK(g <= prev);
                prev = g;
            }
            prev = -1.0;
            for (int l = n; l <= 8 * n; ++l)
            {
                const double g = prop1_worst_case(SystemConfig::make(140e9, 10e9, n, l)).worst_case_gain;
                CHECK(g >= prev);
                prev = g;
            }
        }
    }

    TEST_CASE("aligned-beam closed form vs frequency grid")
    {
        SystemConfig cfg = SystemConfig::make(140e9, 10e9, 8, 16);
        CHECK(aligned_beam_wideband_gain(cfg, 0.0, 0.0) == 8.0);
        CHECK(aligned_beam_wideband_gain(SystemConfig::make(140e9, 0.0, 8, 16), 0.6, 0.6) == 8.0);

        const double pm = 30.0 * pi / 180.0, p = 35.0 * pi / 180.0;
        const double brute = oracle::wideband_min(oracle::matched(8, std::sin(pm)), 140e9, 10e9, p, 4097);
        CHECK(std::abs(aligned_beam_wideband_gain(cfg, pm, p) - brute) <= 1e-6 * brute);
        CHECK(aligned_beam_wideband_gain(cfg, pm, p) ==
              doctest::Approx(oracle::aligned_closed_form(140e9, 10e9, 8, pm, p)).epsilon(1e-13));

        // Library wideband gain of the same beam agrees as well.
        cfg.freq_points = 1025;
        const BeamVector nb = BeamVector::from_weights(steering_composite(8, std::sin(pm)).entries / std::sqrt(8.0));
        CHECK(std::abs(wideband_beam_gain(cfg, p, nb) - aligned_beam_wideband_gain(cfg, pm, p)) <= 1e-6 * brute);
    }

    TEST_CASE("optimal N")
    {
        const double root = oracle::tan_2x_root(1e-12);
        CHECK(std::abs(std::tan(root) - 2.0 * root) <= 1e-9);
        CHECK(std::round(root * 1000.0) / 1000.0 == optimal_n_root);
        CHECK(std::round(4.0 * optimal_n_root / pi * 1000.0) / 1000.0 == optimal_n_coefficient);

        const auto o = prop2_optimal_n(140e9, 10e9, 200);
        CHECK(o.estimate == doctest::Approx(18.24).epsilon(1e-3));
        CHECK(o.candidates.first == 18);
        CHECK(o.candidates.second == 19);

        const auto b0 = prop2_optimal_n(140e9, 0.0, 100);
        CHECK(b0.estimate == doctest::Approx(0.7425 * 100).epsilon(1e-12));

        std::mt19937_64 rng(99);
        for (int t = 0; t < 12; ++t)
        {
            const double fc = oracle::uniform(rng, 20e9, 300e9);
            const double b = oracle::uniform(rng, 0.01, 0.3) * fc;
            const int l = 8 + static_cast<int>(rng() % 250);
            const int top = prop1_max_elements(fc, b, l);
            int arg = 1;
            double best = -1.0, prev = -1.0;
            bool rising = true, unimodal = true;
            for (int n = 1; n <= top; ++n)
            {
                const double g = oracle::narrowband_closed_form(fc, b, n, l);
                if (g > best)
                    best = g, arg = n;
                if (!rising && g > prev)
                    unimodal = false;
                if (g < prev)
                    rising = false;
                prev = g;
            }
            CHECK(unimodal);
            const auto opt = prop2_optimal_n(fc, b, l);
            CHECK((arg == opt.candidates.first || arg == opt.candidates.second));
            CHECK(opt.best == arg);
        }
    }
}

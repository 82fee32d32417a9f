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

#include "wbcb/checks.hpp"
#include "wbcb/codebook.hpp"
#include "wbcb/codebook_io.hpp"
#include "wbcb/zones.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wbcb
{
    namespace
    {
        std::string num(double v) { return format_double(v); }

        double uniform(std::mt19937_64 &rng, double lo, double hi)
        {
            return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        }
    }

    CheckResult check_prop1(const RunConfig &rc)
    {
        const SystemConfig &cfg = rc.system;
        const double closed = prop1_worst_case(cfg).worst_case_gain;
        const double grid = evaluate(cfg, narrowband_codebook(cfg)).worst_case;
        const double err = std::abs(grid - closed);
        const bool pass = err <= std::max(0.02 * std::abs(closed), 1e-3);
        return {"prop1_closed_form_vs_grid", pass, "closed=" + num(closed) + " grid=" + num(grid)};
    }

    CheckResult check_prop2(const RunConfig &rc, double coefficient)
    {
        const double fc = rc.system.carrier_hz, b = rc.system.bandwidth_hz;
        const int l = rc.system.beams;
        const struct
        {
            double b;
            int l;
        } triples[] = {{b, l}, {b / 2.0, l}, {std::min(2.0 * b, 1.9 * fc), l}, {b, std::max(1, l / 2)}, {b, 2 * l}};

        bool pass = true;
        std::string detail;
        for (const auto &t : triples)
        {
            const int top = prop1_max_elements(fc, t.b, t.l);
            int arg = 1;
            double best = -1.0;
            for (int n = 1; n <= std::max(1, top); ++n)
            {
                const double g = prop1_worst_case(SystemConfig::make(fc, t.b, n, t.l)).worst_case_gain;
                if (g > best)
                    best = g, arg = n;
            }
            const OptimalN opt = prop2_optimal_n(fc, t.b, t.l, coefficient);
            const bool ok = arg == opt.candidates.first || arg == opt.candidates.second;
            pass = pass && ok;
            detail += "(L=" + std::to_string(t.l) + ",B=" + num(t.b) + ": argmax=" + std::to_string(arg) + " candidates=" +
                      std::to_string(opt.candidates.first) + "/" + std::to_string(opt.candidates.second) + ") ";
        }
        return {"prop2_argmax_in_candidates", pass, detail};
    }

    CheckResult check_prop3(const RunConfig &rc)
    {
        const Codebook cb = build_codebook(rc.system, rc.solver);
        const double bound = prop3_upper_bound(cb.partition);
        const double worst = evaluate(rc.system, cb).worst_case;
        return {"prop3_upper_bound", worst <= 1.02 * bound, "worst=" + num(worst) + " bound=" + num(bound)};
    }

    CheckResult check_shift(const RunConfig &rc)
    {
        const int n = rc.system.elements;
        std::mt19937_64 rng(rc.seed);
        double worst = 0.0;
        std::vector<double> phases(static_cast<std::size_t>(n));
        for (int trial = 0; trial < 100; ++trial)
        {
            for (auto &p : phases)
                p = uniform(rng, -pi, pi);
            const BeamVector w = BeamVector::from_phases(phases);
            const double t = uniform(rng, -1.0, 1.0);
            const BeamVector shifted = shift_beam(w, t);
            for (int k = 0; k < 512; ++k)
            {
                const double x = -1.0 + 2.0 * static_cast<double>(k) / 511.0;
                worst = std::max(worst, std::abs(pattern_gain(shifted, x) - pattern_gain(w, x - t)));
            }
        }
        return {"lemma1_shift", worst <= 1e-10, "max_abs_err=" + num(worst)};
    }

    CheckResult check_zones_b0(const RunConfig &rc)
    {
        SystemConfig cfg = rc.system;
        cfg.bandwidth_hz = 0.0;
        const ZonePartition part = divide_zones(cfg);
        const double l = static_cast<double>(cfg.beams);
        double worst = std::abs(part.delta_omega - 2.0 / l);
        for (std::size_t i = 0; i < part.boundaries.size(); ++i)
            worst = std::max(worst, std::abs(part.boundaries[i] - std::asin(-1.0 + 2.0 * static_cast<double>(i) / l)));
        return {"zones_b0_uniform_sine", worst <= 1e-12, "max_abs_err=" + num(worst)};
    }

    std::vector<CheckResult> run_validation(const RunConfig &rc, double prop2_coefficient)
    {
        return {check_prop1(rc), check_prop2(rc, prop2_coefficient), check_prop3(rc), check_shift(rc), check_zones_b0(rc)};
    }
}

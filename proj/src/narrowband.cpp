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

#include "wbcb/narrowband.hpp"
#include "wbcb/codebook_io.hpp"
#include "wbcb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wbcb
{
    namespace
    {
        // [sin(N a) / (sqrt(N) sin a)]^2
        double dirichlet_ratio(int elements, double a)
        {
            const double n = static_cast<double>(elements);
            if (a == 0.0)
                return n;
            const double r = std::sin(n * a) / std::sin(a);
            return r * r / n;
        }

        double prop1_gain(double fc, double b, int elements, int beams)
        {
            const double l = static_cast<double>(beams);
            const double limit = 4.0 * fc * l / (2.0 * fc + b * l);
            if (!(static_cast<double>(elements) < limit))
                return 0.0;
            return dirichlet_ratio(elements, pi * (2.0 * fc + b * l) / (4.0 * fc * l));
        }
    }

    Codebook narrowband_codebook(const SystemConfig &cfg)
    {
        cfg.validate();
        Codebook cb;
        cb.partition = uniform_sine_partition(cfg);
        cb.provenance = make_provenance("narrowband", cfg, SolverConfig{});

        const int n = cfg.elements;
        const double l = static_cast<double>(cfg.beams);
        std::vector<double> phases(static_cast<std::size_t>(n));
        for (int b = 1; b <= cfg.beams; ++b)
        {
            const double s = (2.0 * static_cast<double>(b) - 1.0) / l - 1.0;
            for (int i = 0; i < n; ++i)
                phases[static_cast<std::size_t>(i)] = pi * static_cast<double>(i) * s;
            cb.beams.push_back(BeamVector::from_phases(phases));
        }
        return cb;
    }

    double narrowband_worst_case_b0(const SystemConfig &cfg)
    {
        cfg.validate();
        return dirichlet_ratio(cfg.elements, pi / (2.0 * static_cast<double>(cfg.beams)));
    }

    NarrowbandAnalysis prop1_worst_case(const SystemConfig &cfg)
    {
        cfg.validate();
        NarrowbandAnalysis a;
        const double l = static_cast<double>(cfg.beams);
        const double fc = cfg.carrier_hz, b = cfg.bandwidth_hz;
        a.nonzero_condition_holds = static_cast<double>(cfg.elements) < 4.0 * fc * l / (2.0 * fc + b * l);
        a.worst_case_gain = prop1_gain(fc, b, cfg.elements, cfg.beams);
        a.worst_aod = pi / 2.0;
        a.optimal_n_candidates = prop2_optimal_n(fc, b, cfg.beams).candidates;
        return a;
    }

    double aligned_beam_wideband_gain(const SystemConfig &cfg, double phi_m, double phi)
    {
        if (!std::isfinite(phi_m) || !std::isfinite(phi) || std::abs(phi_m) > pi / 2.0 || std::abs(phi) > pi / 2.0)
            throw config_error("angles must lie in [-pi/2, pi/2]");
        const double fc = cfg.carrier_hz;
        const double u = fc * std::abs(std::sin(phi_m) - std::sin(phi)) + 0.5 * cfg.bandwidth_hz * std::abs(std::sin(phi));
        return dirichlet_ratio(cfg.elements, pi / (2.0 * fc) * u);
    }

    int prop1_max_elements(double carrier_hz, double bandwidth_hz, int beams)
    {
        const double l = static_cast<double>(beams);
        const double limit = 4.0 * carrier_hz * l / (2.0 * carrier_hz + bandwidth_hz * l);
        return std::max(0, static_cast<int>(std::ceil(limit)) - 1);
    }

    OptimalN prop2_optimal_n(double carrier_hz, double bandwidth_hz, int beams, double coefficient)
    {
        if (!(carrier_hz > 0.0) || !(bandwidth_hz >= 0.0) || beams < 1)
            throw config_error("prop2 requires f_c > 0, B >= 0, L >= 1");
        OptimalN out;
        const double l = static_cast<double>(beams);
        out.estimate = coefficient * carrier_hz * l / (2.0 * carrier_hz + bandwidth_hz * l);
        const int lo = std::max(1, static_cast<int>(std::floor(out.estimate)));
        const int hi = std::max(1, static_cast<int>(std::ceil(out.estimate)));
        out.candidates = {lo, hi};
        const double g_lo = prop1_gain(carrier_hz, bandwidth_hz, lo, beams);
        const double g_hi = prop1_gain(carrier_hz, bandwidth_hz, hi, beams);
        out.best = (g_hi > g_lo) ? hi : lo;
        return out;
    }
}

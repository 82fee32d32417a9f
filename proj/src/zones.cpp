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

#include "wbcb/zones.hpp"
#include "wbcb/errors.hpp"

#include <cmath>

namespace wbcb
{
    namespace
    {
        constexpr int max_bisection_steps = 200;
        constexpr int max_bracket_doublings = 10;

        struct Walk
        {
            bool reaches_end = false; // phi_L >= pi/2 (or pi/2 passed earlier)
            bool valid = false;       // every boundary is unsaturated
            std::vector<double> boundaries;
        };

        Walk walk(const SystemConfig &cfg, double delta_omega)
        {
            Walk out;
            const int count = cfg.beams;
            out.boundaries.reserve(static_cast<std::size_t>(count) + 1);
            out.boundaries.push_back(-pi / 2.0);
            double prev = -pi / 2.0;
            for (int l = 1; l <= count; ++l)
            {
                const auto step = next_boundary(cfg, prev, delta_omega);
                if (step.saturation == Saturation::below)
                    return out;
                if (step.argument >= 1.0)
                {
                    out.reaches_end = true;
                    out.valid = (l == count) && step.saturation == Saturation::none;
                    if (l == count)
                        out.boundaries.push_back(step.phi);
                    return out;
                }
                out.boundaries.push_back(step.phi);
                prev = step.phi;
            }
            out.valid = true;
            return out;
        }
    }

    VirtualInterval virtual_interval(const SystemConfig &cfg, double phi_lo, double phi_hi)
    {
        if (!std::isfinite(phi_lo) || !std::isfinite(phi_hi))
            throw config_error("zone edges must be finite");
        if (phi_lo < -pi / 2.0 || phi_hi > pi / 2.0)
            throw config_error("zone edges must lie in [-pi/2, pi/2]");
        if (phi_lo >= phi_hi)
            throw config_error("degenerate zone: phi_lo >= phi_hi");

        const double fc = cfg.carrier_hz;
        const double low = (fc - cfg.bandwidth_hz / 2.0) / fc;
        const double high = (fc + cfg.bandwidth_hz / 2.0) / fc;
        const double slo = std::sin(phi_lo), shi = std::sin(phi_hi);
        if (phi_lo >= 0.0)
            return {low * slo, high * shi};
        if (phi_hi <= 0.0)
            return {high * slo, low * shi};
        return {high * slo, high * shi};
    }

    BoundaryStep next_boundary(const SystemConfig &cfg, double phi_prev, double delta_omega)
    {
        const double fc = cfg.carrier_hz;
        const double f_low = fc - cfg.bandwidth_hz / 2.0;
        const double f_high = fc + cfg.bandwidth_hz / 2.0;
        const double sp = std::sin(phi_prev);

        double arg;
        if (phi_prev < 0.0)
        {
            const double s = delta_omega * fc + f_high * sp;
            arg = (s <= 0.0) ? s / f_low : s / f_high;
        }
        else
            arg = (delta_omega * fc + f_low * sp) / f_high;

        BoundaryStep step;
        step.argument = arg;
        if (arg > 1.0)
        {
            step.phi = pi / 2.0;
            step.saturation = Saturation::above;
        }
        else if (arg < -1.0)
        {
            step.phi = -pi / 2.0;
            step.saturation = Saturation::below;
        }
        else
            step.phi = std::asin(arg);
        return step;
    }

    std::vector<VirtualInterval> intervals_from_boundaries(const SystemConfig &cfg, const std::vector<double> &boundaries)
    {
        std::vector<VirtualInterval> out;
        if (boundaries.size() < 2)
            return out;
        out.reserve(boundaries.size() - 1);
        for (std::size_t l = 1; l < boundaries.size(); ++l)
            out.push_back(virtual_interval(cfg, boundaries[l - 1], boundaries[l]));
        return out;
    }

    ZonePartition divide_zones(const SystemConfig &cfg)
    {
        cfg.validate();
        const double fc = cfg.carrier_hz;
        const double f_low = fc - cfg.bandwidth_hz / 2.0;
        const double f_high = fc + cfg.bandwidth_hz / 2.0;
        const double count = static_cast<double>(cfg.beams);

        double lo = (2.0 / count) * f_low / f_high;
        double hi = (2.0 / count) * f_high / f_low + cfg.bandwidth_hz / fc;

        int doublings = 0;
        while (walk(cfg, lo).reaches_end)
        {
            if (++doublings > max_bracket_doublings)
                throw solver_error("zone division: bisection bracket could not be established");
            lo /= 2.0;
        }
        doublings = 0;
        while (!walk(cfg, hi).reaches_end)
        {
            if (++doublings > max_bracket_doublings)
                throw solver_error("zone division: bisection bracket could not be established");
            hi *= 2.0;
        }

        // Bisect down to adjacent doubles; phi_L is pinned to pi/2 afterwards.
        for (int it = 0; it < max_bisection_steps; ++it)
        {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi)
                break;
            if (walk(cfg, mid).reaches_end)
                hi = mid;
            else
                lo = mid;
        }

        Walk chosen = walk(cfg, lo);
        if (!chosen.valid)
        {
            chosen = walk(cfg, hi);
            if (!chosen.valid)
                throw solver_error("zone division: boundary recursion saturated at the converged width");
        }
        chosen.boundaries.resize(static_cast<std::size_t>(cfg.beams) + 1);
        chosen.boundaries.front() = -pi / 2.0;
        chosen.boundaries.back() = pi / 2.0;

        for (std::size_t l = 1; l < chosen.boundaries.size(); ++l)
            if (!(chosen.boundaries[l] > chosen.boundaries[l - 1]))
                throw solver_error("zone division: boundaries are not strictly increasing");

        ZonePartition part;
        part.boundaries = std::move(chosen.boundaries);
        part.delta_omega = hi;
        part.intervals = intervals_from_boundaries(cfg, part.boundaries);
        return part;
    }

    ZonePartition uniform_sine_partition(const SystemConfig &cfg)
    {
        cfg.validate();
        const int count = cfg.beams;
        ZonePartition part;
        part.boundaries.resize(static_cast<std::size_t>(count) + 1);
        for (int l = 0; l <= count; ++l)
            part.boundaries[static_cast<std::size_t>(l)] =
                std::asin(static_cast<double>(2 * l - count) / static_cast<double>(count));
        part.boundaries.front() = -pi / 2.0;
        part.boundaries.back() = pi / 2.0;
        part.delta_omega = 2.0 / static_cast<double>(count);
        part.intervals = intervals_from_boundaries(cfg, part.boundaries);
        return part;
    }

    double prop3_upper_bound(const ZonePartition &partition)
    {
        if (!(partition.delta_omega > 0.0))
            throw config_error("partition width must be positive");
        return 2.0 / partition.delta_omega;
    }
}

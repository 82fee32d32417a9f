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

#include "wbcb/codebook.hpp"
#include "wbcb/codebook_io.hpp"
#include "wbcb/errors.hpp"
#include "wbcb/narrowband.hpp"
#include "wbcb/prv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace wbcb
{
    BeamVector shift_beam(const BeamVector &w, double offset)
    {
        if (!std::isfinite(offset))
            throw config_error("shift offset must be finite");
        const SteeringVector h = steering_composite(w.size(), offset);
        return BeamVector::from_weights(w.weights().cwiseProduct(h.entries));
    }

    Codebook build_codebook(const SystemConfig &cfg, const SolverConfig &solver, SolveResult *prototype)
    {
        cfg.validate();
        solver.validate();

        Codebook cb;
        cb.partition = divide_zones(cfg);
        cb.provenance = make_provenance("wideband", cfg, solver);

        const BeamVector init = prv_beam(prv_plan(cfg.elements, cb.partition.delta_omega));
        SolveResult res = solve(cfg, solver, cb.partition.delta_omega, init);

        cb.beams.reserve(cb.partition.zones());
        for (std::size_t l = 0; l < cb.partition.zones(); ++l)
            cb.beams.push_back(shift_beam(res.beam, cb.partition.center(l)));
        if (prototype)
            *prototype = std::move(res);
        return cb;
    }

    BeamVector design_beam_for_aod(const SystemConfig &cfg, const SolverConfig &solver, double phi)
    {
        cfg.validate();
        solver.validate();
        if (!std::isfinite(phi) || std::abs(phi) > pi / 2.0)
            throw config_error("phi must lie in [-pi/2, pi/2]");

        const double s = std::sin(phi);
        const double width = cfg.bandwidth_hz * std::abs(s) / cfg.carrier_hz;
        if (width == 0.0)
            return BeamVector::from_weights(steering_composite(cfg.elements, s).entries /
                                            std::sqrt(static_cast<double>(cfg.elements)));

        const BeamVector init = prv_beam(prv_plan(cfg.elements, width));
        const SolveResult res = solve(cfg, solver, width, init);
        return shift_beam(res.beam, s);
    }

    std::vector<double> evaluation_angles(const SystemConfig &cfg, const std::vector<double> &boundaries)
    {
        if (cfg.angle_points < 2)
            throw config_error("angle_points must be at least 2");
        const int n = cfg.angle_points;
        const double den = static_cast<double>(n - 1);
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n) + boundaries.size());
        for (int k = 0; k < n; ++k)
            out.push_back(std::asin(static_cast<double>(2 * k - (n - 1)) / den));
        out.front() = -pi / 2.0;
        out.back() = pi / 2.0;
        out.insert(out.end(), boundaries.begin(), boundaries.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    EvaluationReport evaluate(const SystemConfig &cfg, const Codebook &cb, EvalMode mode, std::uint64_t seed)
    {
        cfg.validate();
        if (cb.beams.empty())
            throw config_error("codebook is empty");
        const auto &bounds = cb.partition.boundaries;
        if (bounds.size() != cb.beams.size() + 1)
            throw config_error("codebook partition does not match its beam count");

        std::vector<double> angles;
        if (mode == EvalMode::grid)
            angles = evaluation_angles(cfg, bounds);
        else
        {
            std::mt19937_64 rng(seed);
            angles.reserve(static_cast<std::size_t>(cfg.angle_points));
            for (int k = 0; k < cfg.angle_points; ++k)
            {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                angles.push_back(std::asin(std::clamp(2.0 * u - 1.0, -1.0, 1.0)));
            }
        }

        const BeamBank bank(cfg, cb.beams);
        EvaluationReport rep;
        rep.per_angle.reserve(angles.size());
        rep.per_zone.assign(cb.beams.size(), std::numeric_limits<double>::infinity());
        rep.worst_case = std::numeric_limits<double>::infinity();

        std::vector<std::size_t> zones;
        std::vector<double> zone_gain;
        for (const double phi : angles)
        {
            // Zones whose closed range [phi_l, phi_{l+1}] contains phi.
            zones.clear();
            const auto it = std::upper_bound(bounds.begin(), bounds.end(), phi);
            const auto idx = static_cast<std::size_t>(it - bounds.begin());
            if (idx == 0)
                zones.push_back(0);
            else if (idx >= bounds.size())
                zones.push_back(cb.beams.size() - 1);
            else
            {
                zones.push_back(idx - 1);
                if (bounds[idx - 1] == phi && idx >= 2)
                    zones.push_back(idx - 2);
            }

            const CodebookGain g = bank.best(phi, zones, &zone_gain);
            rep.per_angle.push_back({phi, g.gain, g.best_index});
            if (g.gain < rep.worst_case)
            {
                rep.worst_case = g.gain;
                rep.worst_phi = phi;
            }
            for (std::size_t k = 0; k < zones.size(); ++k)
                rep.per_zone[zones[k]] = std::min(rep.per_zone[zones[k]], zone_gain[k]);
        }
        return rep;
    }

    std::vector<SweepRow> sweep(const SystemConfig &base, const SolverConfig &solver, std::span<const int> elements,
                                std::span<const double> bandwidths_hz, std::span<const int> beams, SweepKind kind)
    {
        std::vector<int> ls(beams.begin(), beams.end());
        if (ls.empty())
            ls.push_back(base.beams);

        std::vector<SweepRow> rows;
        for (const int l : ls)
            for (const int n : elements)
                for (const double b : bandwidths_hz)
                {
                    SystemConfig cfg = base;
                    cfg.elements = n;
                    cfg.bandwidth_hz = b;
                    cfg.beams = (l > 0) ? l : 2 * n;
                    cfg.solver_points = 2 * n;
                    cfg.validate();

                    SweepRow row{n, b, cfg.beams, 0.0, 0.0};
                    switch (kind)
                    {
                    case SweepKind::narrowband:
                        row.bound = prop3_upper_bound(divide_zones(cfg));
                        row.worst_case = prop1_worst_case(cfg).worst_case_gain;
                        break;
                    case SweepKind::wideband:
                    {
                        const Codebook cb = build_codebook(cfg, solver);
                        row.bound = prop3_upper_bound(cb.partition);
                        row.worst_case = evaluate(cfg, cb).worst_case;
                        break;
                    }
                    case SweepKind::bound:
                        row.bound = prop3_upper_bound(divide_zones(cfg));
                        row.worst_case = row.bound;
                        break;
                    }
                    rows.push_back(row);
                }
        return rows;
    }
}

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

#ifndef WBCB_CODEBOOK_HPP
#define WBCB_CODEBOOK_HPP

#include "wbcb/alm.hpp"
#include "wbcb/codebook_types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wbcb
{
    // w ⊙ h(T): translates the gain pattern by T in the composite domain.
    BeamVector shift_beam(const BeamVector &w, double offset);

    // Zone division, PRV start, ALM prototype, then one shifted copy per zone.
    // `prototype` receives the solver output when non-null.
    Codebook build_codebook(const SystemConfig &cfg, const SolverConfig &solver, SolveResult *prototype = nullptr);

    // Wide beam covering the composite interval of a single angle over the whole band.
    BeamVector design_beam_for_aod(const SystemConfig &cfg, const SolverConfig &solver, double phi);

    enum class EvalMode
    {
        grid,
        monte_carlo
    };

    struct AngleSample
    {
        double phi = 0.0;
        double gain = 0.0;
        std::size_t best_beam = 0; // zero-based
    };

    /*!MD
    # EvaluationReport
    `per_angle` follows the evaluation order (ascending for the grid, draw order for Monte Carlo).
    `per_zone[l]` is the minimum wideband gain of beam l over the samples that fall in zone l
    (boundaries belong to both neighbours).
    MD!*/
    struct EvaluationReport
    {
        std::vector<AngleSample> per_angle;
        double worst_case = 0.0;
        double worst_phi = 0.0;
        std::vector<double> per_zone;
    };

    // Sine-uniform grid of cfg.angle_points angles (including +-pi/2) merged with the boundaries.
    std::vector<double> evaluation_angles(const SystemConfig &cfg, const std::vector<double> &boundaries);

    // Monte Carlo draws use mt19937_64 with sin(phi) uniform on [-1, 1].
    EvaluationReport evaluate(const SystemConfig &cfg, const Codebook &cb, EvalMode mode = EvalMode::grid,
                              std::uint64_t seed = 0);

    enum class SweepKind
    {
        narrowband, // closed-form worst case of the narrowband codebook
        wideband,   // designed codebook, grid evaluation
        bound       // worst_case column repeats the bound
    };

    struct SweepRow
    {
        int elements = 0;
        double bandwidth_hz = 0.0;
        int beams = 0;
        double worst_case = 0.0;
        double bound = 0.0;
    };

    // Rows are ordered by L, then N, then B. A non-positive entry in `beams` means L = 2N.
    std::vector<SweepRow> sweep(const SystemConfig &base, const SolverConfig &solver, std::span<const int> elements,
                                std::span<const double> bandwidths_hz, std::span<const int> beams, SweepKind kind);
}

#endif

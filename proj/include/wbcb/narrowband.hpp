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

#ifndef WBCB_NARROWBAND_HPP
#define WBCB_NARROWBAND_HPP

#include "wbcb/codebook_types.hpp"

#include <utility>

namespace wbcb
{
    // Root of tan(x) = 2x on (0, pi], rounded to three decimals.
    inline constexpr double optimal_n_root = 1.166;

    // 4 * optimal_n_root / pi rounded to three decimals.
    inline constexpr double optimal_n_coefficient = 1.485;

    struct NarrowbandAnalysis
    {
        double worst_case_gain = 0.0;
        double worst_aod = pi / 2.0;
        bool nonzero_condition_holds = false;
        std::pair<int, int> optimal_n_candidates{1, 1};
    };

    // sin(phi_l) = (2l - 1)/L - 1, l = 1..L, on the uniform sine partition.
    Codebook narrowband_codebook(const SystemConfig &cfg);

    // Worst case of the narrowband codebook at B = 0.
    double narrowband_worst_case_b0(const SystemConfig &cfg);

    // Closed-form wideband worst case of the narrowband codebook.
    NarrowbandAnalysis prop1_worst_case(const SystemConfig &cfg);

    // Wideband gain of the narrowband beam centred at phi_m, evaluated at phi.
    double aligned_beam_wideband_gain(const SystemConfig &cfg, double phi_m, double phi);

    struct OptimalN
    {
        double estimate = 0.0; // coefficient * f_c L / (2 f_c + B L)
        std::pair<int, int> candidates{1, 1};
        int best = 1;
    };

    // Element count maximising the closed-form worst case; `coefficient` is exposed for testing.
    OptimalN prop2_optimal_n(double carrier_hz, double bandwidth_hz, int beams,
                             double coefficient = optimal_n_coefficient);

    // Largest N with a non-zero closed-form worst case.
    int prop1_max_elements(double carrier_hz, double bandwidth_hz, int beams);
}

#endif

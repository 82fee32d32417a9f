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

#ifndef WBCB_PRV_HPP
#define WBCB_PRV_HPP

#include "wbcb/array_model.hpp"

#include <vector>

namespace wbcb
{
    /*!MD
    # PrvPlan
    Piecewise response vector: the array is cut into `subarrays` blocks of `subarray_size`
    elements. Block z points at `pointing[z]` and carries the phase offset `thetas[z]`;
    neighbouring main lobes cross at `intersections[z]`. All vectors are zero-based.
    MD!*/
    struct PrvPlan
    {
        int elements = 1;
        int subarrays = 1;    // Z
        int subarray_size = 1; // N_s
        double delta_omega = 0.0;
        std::vector<double> thetas;
        std::vector<double> pointing;
        std::vector<double> intersections;
    };

    // Plan for a wide beam covering [-delta_omega/2, delta_omega/2]; delta_omega is clamped to 2.
    PrvPlan prv_plan(int elements, double delta_omega);

    // Same plan with all phase offsets set to zero (reference construction).
    PrvPlan prv_plan_without_phases(int elements, double delta_omega);

    BeamVector prv_beam(const PrvPlan &plan);
}

#endif

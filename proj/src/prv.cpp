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

#include "wbcb/prv.hpp"
#include "wbcb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wbcb
{
    namespace
    {
        constexpr int coverage_check_points = 512;

        int smallest_divisor_at_least(int n, double squared_target)
        {
            for (int z = 1; z <= n; ++z)
                if (n % z == 0 && static_cast<double>(z) * static_cast<double>(z) >= squared_target)
                    return z;
            return n;
        }
    }

    PrvPlan prv_plan(int elements, double delta_omega)
    {
        if (elements < 1)
            throw config_error("elements must be at least 1");
        if (!std::isfinite(delta_omega) || delta_omega <= 0.0)
            throw config_error("delta_omega must be positive and finite");

        const double width = std::min(delta_omega, 2.0);
        const double n = static_cast<double>(elements);

        PrvPlan plan;
        plan.elements = elements;
        plan.delta_omega = width;
        plan.subarrays = (width <= 2.0 / n) ? 1 : smallest_divisor_at_least(elements, width * n / 2.0);
        plan.subarray_size = elements / plan.subarrays;

        const int zc = plan.subarrays;
        const double z_count = static_cast<double>(zc);
        const double ns = static_cast<double>(plan.subarray_size);
        for (int z = 1; z <= zc; ++z)
        {
            const double zd = static_cast<double>(z);
            plan.pointing.push_back(-width / 2.0 + (2.0 * zd - 1.0) * width / (2.0 * z_count));
            plan.intersections.push_back(-width / 2.0 + zd * width / z_count);
            plan.thetas.push_back(((z_count - zd + 1.0) * ns - 1.0) / (2.0 * z_count) * (zd - 1.0) * pi * width);
        }
        return plan;
    }

    PrvPlan prv_plan_without_phases(int elements, double delta_omega)
    {
        PrvPlan plan = prv_plan(elements, delta_omega);
        std::fill(plan.thetas.begin(), plan.thetas.end(), 0.0);
        return plan;
    }

    BeamVector prv_beam(const PrvPlan &plan)
    {
        if (plan.subarrays < 1 || plan.subarray_size < 1 || plan.subarrays * plan.subarray_size != plan.elements ||
            plan.thetas.size() != static_cast<std::size_t>(plan.subarrays) ||
            plan.pointing.size() != static_cast<std::size_t>(plan.subarrays))
            throw config_error("inconsistent PRV plan");

        // Block z holds exp(-j theta_z) exp(+j pi k psi_z), k = 0..N_s-1 (conjugate of the
        // sub-array response vector), so the beam covers the window under the +j convention.
        std::vector<double> phases(static_cast<std::size_t>(plan.elements));
        for (int z = 0; z < plan.subarrays; ++z)
            for (int k = 0; k < plan.subarray_size; ++k)
                phases[static_cast<std::size_t>(z * plan.subarray_size + k)] =
                    pi * static_cast<double>(k) * plan.pointing[static_cast<std::size_t>(z)] -
                    plan.thetas[static_cast<std::size_t>(z)];
        BeamVector w = BeamVector::from_phases(phases);

        if (plan.delta_omega <= 1.0)
        {
            double floor = pattern_gain(w, -plan.delta_omega / 2.0);
            for (int i = 1; i < coverage_check_points; ++i)
            {
                const double x = -plan.delta_omega / 2.0 + plan.delta_omega * static_cast<double>(i) /
                                                               static_cast<double>(coverage_check_points - 1);
                floor = std::min(floor, pattern_gain(w, x));
            }
            if (!(floor > 0.0))
                throw solver_error("PRV beam leaves a null inside its coverage window");
        }
        return w;
    }
}

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

#ifndef WBCB_ZONES_HPP
#define WBCB_ZONES_HPP

#include "wbcb/array_model.hpp"

#include <utility>
#include <vector>

namespace wbcb
{
    // Image [lo, hi] of an angular zone under the composite variable over the whole band.
    using VirtualInterval = std::pair<double, double>;

    /*!MD
    # ZonePartition
    Angular zones phi_0 = -pi/2 < phi_1 < ... < phi_L = pi/2 whose virtual intervals all have
    the common width `delta_omega`.
    MD!*/
    struct ZonePartition
    {
        std::vector<double> boundaries;         // L+1 angles, rad
        double delta_omega = 0.0;               // sine-space units
        std::vector<VirtualInterval> intervals; // one per zone

        std::size_t zones() const noexcept { return intervals.size(); }
        double center(std::size_t zone) const { return 0.5 * (intervals.at(zone).first + intervals.at(zone).second); }
    };

    // Throws config_error unless -pi/2 <= phi_lo < phi_hi <= pi/2.
    VirtualInterval virtual_interval(const SystemConfig &cfg, double phi_lo, double phi_hi);

    enum class Saturation
    {
        none,
        above, // arcsin argument > 1: pi/2 is reached inside this zone
        below  // arcsin argument < -1: the width is too small to leave -pi/2
    };

    struct BoundaryStep
    {
        double phi = 0.0; // clamped to +-pi/2 when saturated
        Saturation saturation = Saturation::none;
        double argument = 0.0; // raw arcsin argument
    };

    // Boundary phi_l following phi_prev such that the zone's virtual width equals delta_omega.
    BoundaryStep next_boundary(const SystemConfig &cfg, double phi_prev, double delta_omega);

    // Equal-width partition of [-pi/2, pi/2] into cfg.beams zones (bisection on the width).
    ZonePartition divide_zones(const SystemConfig &cfg);

    // Uniform sine partition sin(phi_l) = -1 + 2l/L with the exact virtual intervals attached.
    ZonePartition uniform_sine_partition(const SystemConfig &cfg);

    // Rebuilds intervals from boundaries (used after deserialization).
    std::vector<VirtualInterval> intervals_from_boundaries(const SystemConfig &cfg, const std::vector<double> &boundaries);

    // 2 / delta_omega
    double prop3_upper_bound(const ZonePartition &partition);
}

#endif

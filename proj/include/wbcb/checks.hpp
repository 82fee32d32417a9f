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

#ifndef WBCB_CHECKS_HPP
#define WBCB_CHECKS_HPP

#include "wbcb/narrowband.hpp"
#include "wbcb/run_config.hpp"

#include <string>
#include <vector>

namespace wbcb
{
    struct CheckResult
    {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    // Closed-form worst case vs grid evaluation of the narrowband codebook (2 %, 1e-3 floor).
    CheckResult check_prop1(const RunConfig &rc);

    // Exhaustive search over N lands on a candidate, for the configured (f_c, B, L) and four
    // neighbouring triples.
    CheckResult check_prop2(const RunConfig &rc, double coefficient = optimal_n_coefficient);

    // Designed worst case <= 1.02 * 2 / delta_omega.
    CheckResult check_prop3(const RunConfig &rc);

    // 100 random shifts: translated pattern matches to 1e-10 on 512 points.
    CheckResult check_shift(const RunConfig &rc);

    // B = 0 partition equals the uniform sine partition to 1e-12.
    CheckResult check_zones_b0(const RunConfig &rc);

    std::vector<CheckResult> run_validation(const RunConfig &rc, double prop2_coefficient = optimal_n_coefficient);
}

#endif

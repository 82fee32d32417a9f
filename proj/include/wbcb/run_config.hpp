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

#ifndef WBCB_RUN_CONFIG_HPP
#define WBCB_RUN_CONFIG_HPP

#include "wbcb/alm.hpp"
#include "wbcb/array_model.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wbcb
{
    /*!MD
    # RunConfig
    Flat JSON object; every key is optional.

    | key       | default | meaning                                   |
    |-----------|---------|-------------------------------------------|
    | f_c_hz    | 140e9   | carrier frequency                         |
    | b_hz      | 10e9    | bandwidth                                 |
    | n         | 16      | antennas                                  |
    | l         | 32      | beams                                     |
    | m         | 2n      | solver grid points                        |
    | n_freq    | 257     | frequency grid for wideband minima        |
    | n_angle   | 4096    | angle grid / Monte Carlo draw count       |
    | rho1 rho2 | 1       | penalties                                 |
    | beta1 beta2 | 1e-3  | dual step sizes                           |
    | n_ite     | 50      | iterations                                |
    | eps       | 0       | residual stop threshold                   |
    | seed      | 0       | Monte Carlo / self-check seed             |
    MD!*/
    struct RunConfig
    {
        SystemConfig system;
        SolverConfig solver;
        std::uint64_t seed = 0;

        void validate() const;
    };

    // Parses the text of a config file; unknown keys and wrong types are config errors.
    RunConfig parse_run_config(std::string_view text);

    // io_error when the file cannot be read.
    RunConfig load_run_config(const std::filesystem::path &path);

    // "a:b:step" (inclusive) or a comma list.
    std::vector<int> parse_int_range(const std::string &text);
    std::vector<double> parse_real_range(const std::string &text);
}

#endif

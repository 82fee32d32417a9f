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

#ifndef WBCB_COMMANDS_HPP
#define WBCB_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wbcb
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_config = 1, // invalid config or malformed codebook
        exit_io = 2,
        exit_solver = 3 // solver failure or a failed self-check
    };

    // Entry point of the `wbcb` tool: design | baseline | eval | sweep | validate.
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif

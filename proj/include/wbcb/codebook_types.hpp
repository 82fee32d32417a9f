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

#ifndef WBCB_CODEBOOK_TYPES_HPP
#define WBCB_CODEBOOK_TYPES_HPP

#include "wbcb/alm.hpp"
#include "wbcb/array_model.hpp"
#include "wbcb/zones.hpp"

#include <string>
#include <vector>

namespace wbcb
{
    struct Provenance
    {
        std::string kind = "wideband"; // "wideband" or "narrowband"
        SystemConfig system;
        SolverConfig solver;
        std::string input_hash; // git blob SHA-1 of the canonical input record
    };

    struct Codebook
    {
        std::vector<BeamVector> beams;
        ZonePartition partition;
        Provenance provenance;

        std::size_t size() const noexcept { return beams.size(); }
    };
}

#endif

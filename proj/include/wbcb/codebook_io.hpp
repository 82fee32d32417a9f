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

#ifndef WBCB_CODEBOOK_IO_HPP
#define WBCB_CODEBOOK_IO_HPP

#include "wbcb/codebook.hpp"
#include "wbcb/codebook_types.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wbcb
{
    // 17 significant digits, locale independent; -0 is written as 0.
    std::string format_double(double v);

    // Canonical one-line record of the design inputs.
    std::string canonical_input_record(const std::string &kind, const SystemConfig &cfg, const SolverConfig &solver);

    // Hex SHA-1 of "blob <size>\0<data>", as computed by `git hash-object`.
    std::string git_blob_sha1(std::string_view data);

    Provenance make_provenance(const std::string &kind, const SystemConfig &cfg, const SolverConfig &solver);

    /*!MD
    # Codebook document
    ```
    { "version": 1,
      "config": { "f_c_hz", "b_hz", "n", "l" },
      "delta_omega": float,
      "boundaries_rad": [ L+1 floats ],
      "beams": [ [ [re, im], ... N pairs ], ... L rows ],
      "provenance": { "kind", "m", "n_freq", "n_angle", "rho1", "rho2",
                      "beta1", "beta2", "n_ite", "eps", "input_sha1" } }
    ```
    `provenance` is optional on input. Errors carry the JSON pointer of the offending field.
    MD!*/
    std::string codebook_to_json(const Codebook &cb);
    Codebook codebook_from_json(std::string_view text);

    // Throw io_error on file-system failures.
    std::string read_text_file(const std::filesystem::path &path);
    void write_text_file(const std::filesystem::path &path, const std::string &text);

    void write_codebook(const std::filesystem::path &path, const Codebook &cb);
    Codebook read_codebook(const std::filesystem::path &path);

    // phi_deg,gain,best_beam
    std::string evaluation_csv(const EvaluationReport &report);

    // N,B_GHz,worst_case,bound (with an L column after B_GHz when `with_beams`)
    std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_beams);
}

#endif

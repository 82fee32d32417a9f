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

#ifndef WBCB_ERRORS_HPP
#define WBCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wbcb
{
    // Invalid configuration or out-of-domain argument.
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // File could not be read or written.
    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Numerical failure inside a solver (bisection bracket, factorization).
    class solver_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Malformed codebook document; pointer() is the JSON pointer of the offending field.
    class format_error : public std::runtime_error
    {
    public:
        format_error(const std::string &pointer, const std::string &what)
            : std::runtime_error((pointer.empty() ? std::string("document root") : pointer) + ": " + what), pointer_(pointer) {}
        const std::string &pointer() const noexcept { return pointer_; }

    private:
        std::string pointer_;
    };
}

#endif

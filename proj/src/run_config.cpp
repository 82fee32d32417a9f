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

#include "wbcb/run_config.hpp"
#include "wbcb/codebook_io.hpp"
#include "wbcb/errors.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace wbcb
{
    namespace
    {
        using json = nlohmann::json;

        double real_value(const json &v, const std::string &key)
        {
            if (!v.is_number())
                throw config_error("config key '" + key + "' must be a number");
            return v.get<double>();
        }

        long long int_value(const json &v, const std::string &key)
        {
            if (v.is_number_integer())
                return v.get<long long>();
            if (v.is_number_float())
            {
                const double d = v.get<double>();
                if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e15)
                    return static_cast<long long>(d);
            }
            throw config_error("config key '" + key + "' must be an integer");
        }

        int small_int(const json &v, const std::string &key)
        {
            const long long i = int_value(v, key);
            if (i < -1'000'000'000LL || i > 1'000'000'000LL)
                throw config_error("config key '" + key + "' is out of range");
            return static_cast<int>(i);
        }

        template <typename T, typename F>
        std::vector<T> parse_range(const std::string &text, F convert)
        {
            std::vector<T> out;
            if (text.find(':') != std::string::npos)
            {
                std::vector<std::string> parts;
                std::stringstream ss(text);
                for (std::string p; std::getline(ss, p, ':');)
                    parts.push_back(p);
                if (parts.size() != 3)
                    throw config_error("range '" + text + "' must look like start:stop:step");
                const T a = convert(parts[0]), b = convert(parts[1]), step = convert(parts[2]);
                if (!(step > T(0)))
                    throw config_error("range step must be positive in '" + text + "'");
                const long long count = static_cast<long long>(std::floor(static_cast<double>(b - a) / static_cast<double>(step) + 1e-9)) + 1;
                if (count < 1 || count > 100000)
                    throw config_error("range '" + text + "' is empty or too long");
                for (long long k = 0; k < count; ++k)
                    out.push_back(static_cast<T>(a + static_cast<T>(k) * step));
                return out;
            }
            std::stringstream ss(text);
            for (std::string p; std::getline(ss, p, ',');)
                out.push_back(convert(p));
            if (out.empty())
                throw config_error("empty list '" + text + "'");
            return out;
        }
    }

    void RunConfig::validate() const
    {
        system.validate();
        solver.validate();
    }

    RunConfig parse_run_config(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error &e)
        {
            throw config_error(std::string("config is not valid JSON: ") + e.what());
        }
        if (!doc.is_object())
            throw config_error("config must be a JSON object");

        RunConfig rc;
        bool explicit_m = false;
        for (const auto &[key, v] : doc.items())
        {
            if (key == "f_c_hz")
                rc.system.carrier_hz = real_value(v, key);
            else if (key == "b_hz")
                rc.system.bandwidth_hz = real_value(v, key);
            else if (key == "n")
                rc.system.elements = small_int(v, key);
            else if (key == "l")
                rc.system.beams = small_int(v, key);
            else if (key == "m")
                rc.system.solver_points = small_int(v, key), explicit_m = true;
            else if (key == "n_freq")
                rc.system.freq_points = small_int(v, key);
            else if (key == "n_angle")
                rc.system.angle_points = small_int(v, key);
            else if (key == "rho1")
                rc.solver.rho1 = real_value(v, key);
            else if (key == "rho2")
                rc.solver.rho2 = real_value(v, key);
            else if (key == "beta1")
                rc.solver.beta1 = real_value(v, key);
            else if (key == "beta2")
                rc.solver.beta2 = real_value(v, key);
            else if (key == "n_ite")
                rc.solver.n_ite = small_int(v, key);
            else if (key == "eps")
                rc.solver.eps = real_value(v, key);
            else if (key == "seed")
            {
                const long long s = int_value(v, key);
                if (s < 0)
                    throw config_error("config key 'seed' must be non-negative");
                rc.seed = static_cast<std::uint64_t>(s);
            }
            else
                throw config_error("unknown config key '" + key + "'");
        }
        if (!explicit_m)
            rc.system.solver_points = 2 * rc.system.elements;
        rc.validate();
        return rc;
    }

    RunConfig load_run_config(const std::filesystem::path &path)
    {
        return parse_run_config(read_text_file(path));
    }

    std::vector<int> parse_int_range(const std::string &text)
    {
        return parse_range<int>(text, [](const std::string &s)
                                {
            std::size_t pos = 0;
            int v = 0;
            try { v = std::stoi(s, &pos); } catch (const std::exception &) { pos = 0; }
            if (pos == 0 || pos != s.size())
                throw config_error("'" + s + "' is not an integer");
            return v; });
    }

    std::vector<double> parse_real_range(const std::string &text)
    {
        return parse_range<double>(text, [](const std::string &s)
                                   {
            std::size_t pos = 0;
            double v = 0.0;
            try { v = std::stod(s, &pos); } catch (const std::exception &) { pos = 0; }
            if (pos == 0 || pos != s.size() || !std::isfinite(v))
                throw config_error("'" + s + "' is not a number");
            return v; });
    }
}

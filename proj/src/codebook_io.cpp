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

#include "wbcb/codebook_io.hpp"
#include "wbcb/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

namespace wbcb
{
    namespace
    {
        using json = nlohmann::json;

        std::string child(const std::string &ptr, const std::string &key) { return ptr + "/" + key; }
        std::string child(const std::string &ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

        const json &require(const json &obj, const std::string &ptr, const std::string &key)
        {
            if (!obj.is_object())
                throw format_error(ptr, "expected an object");
            const auto it = obj.find(key);
            if (it == obj.end())
                throw format_error(child(ptr, key), "missing field");
            return *it;
        }

        double as_double(const json &v, const std::string &ptr)
        {
            if (!v.is_number())
                throw format_error(ptr, "expected a number");
            return v.get<double>();
        }

        int as_int(const json &v, const std::string &ptr)
        {
            if (!v.is_number_integer())
                throw format_error(ptr, "expected an integer");
            const auto i = v.get<long long>();
            if (i < 1 || i > 1'000'000)
                throw format_error(ptr, "integer out of range");
            return static_cast<int>(i);
        }

        const json &as_array(const json &v, const std::string &ptr, std::size_t expected_size)
        {
            if (!v.is_array())
                throw format_error(ptr, "expected an array");
            if (v.size() != expected_size)
                throw format_error(ptr, "expected " + std::to_string(expected_size) + " entries, found " +
                                            std::to_string(v.size()));
            return v;
        }

        void append_solver_fields(std::string &s, const SystemConfig &cfg, const SolverConfig &solver)
        {
            s += "\"m\": " + std::to_string(cfg.solver_points);
            s += ", \"n_freq\": " + std::to_string(cfg.freq_points);
            s += ", \"n_angle\": " + std::to_string(cfg.angle_points);
            s += ", \"rho1\": " + format_double(solver.rho1);
            s += ", \"rho2\": " + format_double(solver.rho2);
            s += ", \"beta1\": " + format_double(solver.beta1);
            s += ", \"beta2\": " + format_double(solver.beta2);
            s += ", \"n_ite\": " + std::to_string(solver.n_ite);
            s += ", \"eps\": " + format_double(solver.eps);
        }

        std::string config_object(const SystemConfig &cfg)
        {
            return "{\"f_c_hz\": " + format_double(cfg.carrier_hz) + ", \"b_hz\": " + format_double(cfg.bandwidth_hz) +
                   ", \"n\": " + std::to_string(cfg.elements) + ", \"l\": " + std::to_string(cfg.beams) + "}";
        }
    }

    std::string format_double(double v)
    {
        if (!std::isfinite(v))
            throw config_error("cannot serialize a non-finite value");
        if (v == 0.0)
            return "0";
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
        return std::string(buf, res.ptr);
    }

    std::string canonical_input_record(const std::string &kind, const SystemConfig &cfg, const SolverConfig &solver)
    {
        std::string s = "{\"kind\": \"" + kind + "\", \"config\": " + config_object(cfg) + ", ";
        append_solver_fields(s, cfg, solver);
        s += "}\n";
        return s;
    }

    std::string git_blob_sha1(std::string_view data)
    {
        const std::string header = "blob " + std::to_string(data.size()) + std::string(1, '\0');
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_MD_CTX *ctx = EVP_MD_CTX_new();
        if (!ctx)
            throw std::runtime_error("SHA-1 context allocation failed");
        const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                        EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                        EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
                        EVP_DigestFinal_ex(ctx, digest, &len) == 1;
        EVP_MD_CTX_free(ctx);
        if (!ok)
            throw std::runtime_error("SHA-1 digest failed");
        static constexpr char hex[] = "0123456789abcdef";
        std::string out;
        for (unsigned int i = 0; i < len; ++i)
        {
            out += hex[digest[i] >> 4];
            out += hex[digest[i] & 0xF];
        }
        return out;
    }

    Provenance make_provenance(const std::string &kind, const SystemConfig &cfg, const SolverConfig &solver)
    {
        Provenance p;
        p.kind = kind;
        p.system = cfg;
        p.solver = solver;
        p.input_hash = git_blob_sha1(canonical_input_record(kind, cfg, solver));
        return p;
    }

    std::string codebook_to_json(const Codebook &cb)
    {
        const auto &cfg = cb.provenance.system;
        std::string s;
        s += "{\n";
        s += "  \"version\": 1,\n";
        s += "  \"config\": " + config_object(cfg) + ",\n";
        s += "  \"delta_omega\": " + format_double(cb.partition.delta_omega) + ",\n";
        s += "  \"boundaries_rad\": [";
        for (std::size_t i = 0; i < cb.partition.boundaries.size(); ++i)
            s += (i ? ", " : "") + format_double(cb.partition.boundaries[i]);
        s += "],\n";
        s += "  \"beams\": [\n";
        for (std::size_t l = 0; l < cb.beams.size(); ++l)
        {
            s += "    [";
            const cvec &w = cb.beams[l].weights();
            for (Eigen::Index i = 0; i < w.size(); ++i)
                s += std::string(i ? ", " : "") + "[" + format_double(w(i).real()) + ", " + format_double(w(i).imag()) + "]";
            s += (l + 1 < cb.beams.size()) ? "],\n" : "]\n";
        }
        s += "  ],\n";
        s += "  \"provenance\": {\"kind\": \"" + cb.provenance.kind + "\", ";
        append_solver_fields(s, cfg, cb.provenance.solver);
        s += ", \"input_sha1\": \"" + cb.provenance.input_hash + "\"}\n";
        s += "}\n";
        return s;
    }

    Codebook codebook_from_json(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error &e)
        {
            throw format_error("", std::string("invalid JSON: ") + e.what());
        }

        const auto &version = require(doc, "", "version");
        if (!version.is_number_integer() || version.get<long long>() != 1)
            throw format_error("/version", "unsupported version");

        Codebook cb;
        SystemConfig &cfg = cb.provenance.system;
        const auto &jc = require(doc, "", "config");
        cfg.carrier_hz = as_double(require(jc, "/config", "f_c_hz"), "/config/f_c_hz");
        cfg.bandwidth_hz = as_double(require(jc, "/config", "b_hz"), "/config/b_hz");
        cfg.elements = as_int(require(jc, "/config", "n"), "/config/n");
        cfg.beams = as_int(require(jc, "/config", "l"), "/config/l");
        cfg.solver_points = 2 * cfg.elements;

        if (const auto it = doc.find("provenance"); it != doc.end())
        {
            const json &p = *it;
            const std::string ptr = "/provenance";
            const auto &kind = require(p, ptr, "kind");
            if (!kind.is_string())
                throw format_error(ptr + "/kind", "expected a string");
            cb.provenance.kind = kind.get<std::string>();
            cfg.solver_points = as_int(require(p, ptr, "m"), ptr + "/m");
            cfg.freq_points = as_int(require(p, ptr, "n_freq"), ptr + "/n_freq");
            cfg.angle_points = as_int(require(p, ptr, "n_angle"), ptr + "/n_angle");
            auto &sc = cb.provenance.solver;
            sc.rho1 = as_double(require(p, ptr, "rho1"), ptr + "/rho1");
            sc.rho2 = as_double(require(p, ptr, "rho2"), ptr + "/rho2");
            sc.beta1 = as_double(require(p, ptr, "beta1"), ptr + "/beta1");
            sc.beta2 = as_double(require(p, ptr, "beta2"), ptr + "/beta2");
            sc.n_ite = as_int(require(p, ptr, "n_ite"), ptr + "/n_ite");
            sc.eps = as_double(require(p, ptr, "eps"), ptr + "/eps");
            const auto &hash = require(p, ptr, "input_sha1");
            if (!hash.is_string())
                throw format_error(ptr + "/input_sha1", "expected a string");
            cb.provenance.input_hash = hash.get<std::string>();
        }
        else
            cb.provenance.input_hash = git_blob_sha1(canonical_input_record(cb.provenance.kind, cfg, cb.provenance.solver));

        try
        {
            cfg.validate();
        }
        catch (const config_error &e)
        {
            throw format_error("/config", e.what());
        }

        const std::size_t zones = static_cast<std::size_t>(cfg.beams);
        const std::size_t n = static_cast<std::size_t>(cfg.elements);

        cb.partition.delta_omega = as_double(require(doc, "", "delta_omega"), "/delta_omega");
        if (!(cb.partition.delta_omega > 0.0))
            throw format_error("/delta_omega", "must be positive");

        const auto &jb = as_array(require(doc, "", "boundaries_rad"), "/boundaries_rad", zones + 1);
        for (std::size_t i = 0; i < jb.size(); ++i)
        {
            const double phi = as_double(jb[i], child("/boundaries_rad", i));
            if (std::abs(phi) > pi / 2.0 || (i > 0 && !(phi > cb.partition.boundaries.back())))
                throw format_error(child("/boundaries_rad", i), "boundaries must increase within [-pi/2, pi/2]");
            cb.partition.boundaries.push_back(phi);
        }
        cb.partition.intervals = intervals_from_boundaries(cfg, cb.partition.boundaries);

        const auto &jw = as_array(require(doc, "", "beams"), "/beams", zones);
        for (std::size_t l = 0; l < zones; ++l)
        {
            const std::string bp = child("/beams", l);
            const auto &row = as_array(jw[l], bp, n);
            cvec w(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i)
            {
                const std::string ep = child(bp, i);
                const auto &pair = as_array(row[i], ep, 2);
                w(static_cast<Eigen::Index>(i)) = {as_double(pair[0], child(ep, 0)), as_double(pair[1], child(ep, 1))};
            }
            try
            {
                cb.beams.push_back(BeamVector::from_weights(std::move(w)));
            }
            catch (const config_error &e)
            {
                throw format_error(bp, e.what());
            }
        }
        return cb;
    }

    std::string read_text_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw io_error("cannot open '" + path.string() + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad())
            throw io_error("failed to read '" + path.string() + "'");
        return ss.str();
    }

    void write_text_file(const std::filesystem::path &path, const std::string &text)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot open '" + path.string() + "' for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out)
            throw io_error("failed to write '" + path.string() + "'");
    }

    void write_codebook(const std::filesystem::path &path, const Codebook &cb)
    {
        write_text_file(path, codebook_to_json(cb));
    }

    Codebook read_codebook(const std::filesystem::path &path)
    {
        return codebook_from_json(read_text_file(path));
    }

    std::string evaluation_csv(const EvaluationReport &report)
    {
        std::string s = "phi_deg,gain,best_beam\n";
        for (const auto &a : report.per_angle)
            s += format_double(a.phi * 180.0 / pi) + "," + format_double(a.gain) + "," + std::to_string(a.best_beam) + "\n";
        return s;
    }

    std::string sweep_csv(const std::vector<SweepRow> &rows, bool with_beams)
    {
        std::string s = with_beams ? "N,B_GHz,L,worst_case,bound\n" : "N,B_GHz,worst_case,bound\n";
        for (const auto &r : rows)
        {
            s += std::to_string(r.elements) + "," + format_double(r.bandwidth_hz / 1e9) + ",";
            if (with_beams)
                s += std::to_string(r.beams) + ",";
            s += format_double(r.worst_case) + "," + format_double(r.bound) + "\n";
        }
        return s;
    }
}

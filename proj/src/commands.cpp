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

#include "wbcb/commands.hpp"
#include "wbcb/checks.hpp"
#include "wbcb/codebook.hpp"
#include "wbcb/codebook_io.hpp"
#include "wbcb/errors.hpp"
#include "wbcb/narrowband.hpp"
#include "wbcb/run_config.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include <CLI11.hpp>

namespace wbcb
{
    namespace
    {
        RunConfig config_or_default(const std::string &path)
        {
            if (path.empty())
            {
                RunConfig rc;
                rc.validate();
                return rc;
            }
            return load_run_config(path);
        }

        void print_warnings(const SystemConfig &cfg, std::ostream &err)
        {
            for (const auto &w : cfg.warnings())
                err << "warning: " << w << "\n";
        }

        double seconds_since(std::chrono::steady_clock::time_point t0)
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }

        int cmd_design(const std::string &config, const std::string &out_path, std::ostream &out, std::ostream &err)
        {
            const auto t0 = std::chrono::steady_clock::now();
            const RunConfig rc = config_or_default(config);
            print_warnings(rc.system, err);
            const Codebook cb = build_codebook(rc.system, rc.solver);
            const double worst = evaluate(rc.system, cb).worst_case;
            write_codebook(out_path, cb);
            out << "delta_omega " << format_double(cb.partition.delta_omega) << "\n"
                << "prop3_bound " << format_double(prop3_upper_bound(cb.partition)) << "\n"
                << "worst_case " << format_double(worst) << "\n"
                << "wall_time_s " << seconds_since(t0) << "\n";
            return exit_ok;
        }

        int cmd_baseline(const std::string &config, const std::string &out_path, std::ostream &out, std::ostream &err)
        {
            const auto t0 = std::chrono::steady_clock::now();
            const RunConfig rc = config_or_default(config);
            print_warnings(rc.system, err);
            const Codebook cb = narrowband_codebook(rc.system);
            const double worst = evaluate(rc.system, cb).worst_case;
            write_codebook(out_path, cb);
            out << "closed_form_worst_case " << format_double(prop1_worst_case(rc.system).worst_case_gain) << "\n"
                << "worst_case " << format_double(worst) << "\n"
                << "wall_time_s " << seconds_since(t0) << "\n";
            return exit_ok;
        }

        struct EvalOptions
        {
            std::string codebook, mode = "grid", csv, config;
            std::uint64_t seed = 0;
            int n_angle = 0, n_freq = 0;
        };

        int cmd_eval(const EvalOptions &o, std::ostream &out)
        {
            const Codebook cb = read_codebook(o.codebook);
            SystemConfig cfg = cb.provenance.system;
            if (!o.config.empty())
            {
                const RunConfig rc = load_run_config(o.config);
                cfg.angle_points = rc.system.angle_points;
                cfg.freq_points = rc.system.freq_points;
            }
            if (o.n_angle > 0)
                cfg.angle_points = o.n_angle;
            if (o.n_freq > 0)
                cfg.freq_points = o.n_freq;
            cfg.validate();

            const EvalMode mode = (o.mode == "mc") ? EvalMode::monte_carlo : EvalMode::grid;
            const EvaluationReport rep = evaluate(cfg, cb, mode, o.seed);
            if (!o.csv.empty())
                write_text_file(o.csv, evaluation_csv(rep));
            out << "worst_case " << format_double(rep.worst_case) << " at phi_deg " << format_double(rep.worst_phi * 180.0 / pi)
                << "\n";
            return exit_ok;
        }

        struct SweepOptions
        {
            std::string config, n_range = "16", b_range = "10", l_list, what = "narrowband", csv;
        };

        int cmd_sweep(const SweepOptions &o, std::ostream &out)
        {
            const RunConfig rc = config_or_default(o.config);
            const std::vector<int> ns = parse_int_range(o.n_range);
            std::vector<double> bs = parse_real_range(o.b_range);
            for (double &b : bs)
                b *= 1e9;
            const std::vector<int> ls = o.l_list.empty() ? std::vector<int>{rc.system.beams} : parse_int_range(o.l_list);
            const SweepKind kind = (o.what == "wideband") ? SweepKind::wideband
                                   : (o.what == "bound")  ? SweepKind::bound
                                                          : SweepKind::narrowband;
            const auto rows = sweep(rc.system, rc.solver, ns, bs, ls, kind);
            const std::string csv = sweep_csv(rows, !o.l_list.empty());
            if (o.csv.empty())
                out << csv;
            else
                write_text_file(o.csv, csv);
            return exit_ok;
        }

        int cmd_validate(const std::string &config, double coefficient, std::ostream &out)
        {
            const RunConfig rc = config_or_default(config);
            bool all = true;
            for (const auto &c : run_validation(rc, coefficient))
            {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << " " << c.detail << "\n";
                all = all && c.pass;
            }
            return all ? exit_ok : exit_solver;
        }
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Wideband analog beamforming codebook design", "wbcb"};
        app.require_subcommand(1);

        std::function<int()> action;

        std::string design_config, design_out;
        auto *design = app.add_subcommand("design", "Design the wideband codebook and write it as JSON");
        design->add_option("file,--config", design_config, "Config file (JSON); defaults apply when omitted");
        design->add_option("--out,-o", design_out, "Output codebook file")->required();
        design->callback([&]
                         { action = [&]
                           { return cmd_design(design_config, design_out, out, err); }; });

        std::string base_config, base_out;
        auto *baseline = app.add_subcommand("baseline", "Write the narrowband codebook as JSON");
        baseline->add_option("file,--config", base_config, "Config file (JSON); defaults apply when omitted");
        baseline->add_option("--out,-o", base_out, "Output codebook file")->required();
        baseline->callback([&]
                           { action = [&]
                             { return cmd_baseline(base_config, base_out, out, err); }; });

        EvalOptions eo;
        auto *eval = app.add_subcommand("eval", "Evaluate a codebook over angles");
        eval->add_option("codebook", eo.codebook, "Codebook JSON")->required();
        eval->add_option("--mode", eo.mode, "grid or mc")->check(CLI::IsMember({"grid", "mc"}));
        eval->add_option("--seed", eo.seed, "Monte Carlo seed");
        eval->add_option("--csv", eo.csv, "Per-angle CSV output");
        eval->add_option("--config", eo.config, "Config supplying n_angle and n_freq");
        eval->add_option("--n-angle", eo.n_angle, "Angle grid size / draw count");
        eval->add_option("--n-freq", eo.n_freq, "Frequency grid size");
        eval->callback([&]
                       { action = [&]
                         { return cmd_eval(eo, out); }; });

        SweepOptions so;
        auto *sw = app.add_subcommand("sweep", "Worst case and bound over (N, B[, L]) cells");
        sw->add_option("file,--config", so.config, "Config file (JSON); defaults apply when omitted");
        sw->add_option("--n-range", so.n_range, "Antenna counts, start:stop:step or a,b,c");
        sw->add_option("--b-range", so.b_range, "Bandwidths in GHz, start:stop:step or a,b,c");
        sw->add_option("--l", so.l_list, "Beam counts (0 means 2N); adds an L column");
        sw->add_option("--what", so.what, "narrowband, wideband or bound")
            ->check(CLI::IsMember({"narrowband", "wideband", "bound"}));
        sw->add_option("--csv", so.csv, "CSV output (stdout when omitted)");
        sw->callback([&]
                     { action = [&]
                       { return cmd_sweep(so, out); }; });

        std::string val_config;
        double coefficient = optimal_n_coefficient;
        auto *val = app.add_subcommand("validate", "Run the closed-form self-checks");
        val->add_option("file,--config", val_config, "Config file (JSON); defaults apply when omitted");
        val->add_option("--prop2-coefficient", coefficient, "Override of the optimal-N coefficient")->group("");
        val->callback([&]
                      { action = [&]
                        { return cmd_validate(val_config, coefficient, out); }; });

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_config;
        }

        try
        {
            return action ? action() : exit_config;
        }
        catch (const format_error &e)
        {
            err << "error: malformed codebook at " << e.what() << "\n";
            return exit_config;
        }
        catch (const config_error &e)
        {
            err << "error: invalid configuration: " << e.what() << "\n";
            return exit_config;
        }
        catch (const io_error &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_io;
        }
        catch (const solver_error &e)
        {
            err << "error: solver failure: " << e.what() << "\n";
            return exit_solver;
        }
    }
}

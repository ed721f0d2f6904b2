// SPDX-License-Identifier: Apache-2.0
//
// mbsat: return-link capacity of clustered multibeam satellite systems
// Copyright (C) 2026 mbsat contributors
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

// Command-line front end: simulate, bounds, layout, linkbudget.

#include "mbsat/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace
{
    struct Overrides
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::optional<int> iterations;
        std::optional<double> gamma_min, gamma_max, gamma_step;
        std::string scenario = "";
        std::string out;
        int threads = 0;
        bool fixed_users = false;
    };

    void add_common(CLI::App *cmd, Overrides &o, bool monte_carlo)
    {
        cmd->add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
        cmd->add_option("--seed", o.seed, "64-bit seed");
        cmd->add_option("--scenario", o.scenario, "Color scenario: 1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
        cmd->add_option("--out", o.out, "Output CSV path");
        if (monte_carlo)
        {
            cmd->add_option("--iterations", o.iterations, "Monte Carlo iterations")->check(CLI::PositiveNumber);
            cmd->add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
            cmd->add_flag("--fixed-users", o.fixed_users, "Freeze user positions across iterations");
        }
        cmd->add_option("--gamma-min", o.gamma_min, "Lowest transmit SNR, dB");
        cmd->add_option("--gamma-max", o.gamma_max, "Highest transmit SNR, dB");
        cmd->add_option("--gamma-step", o.gamma_step, "SNR step, dB");
    }

    mbsat::RunConfig resolve(const Overrides &o)
    {
        mbsat::RunConfig c = o.config_path.empty() ? mbsat::RunConfig{} : mbsat::load_config(o.config_path);
        if (o.seed)
            c.seed = *o.seed;
        if (o.iterations)
            c.iterations = *o.iterations;
        if (o.gamma_min)
            c.gamma_min_db = *o.gamma_min;
        if (o.gamma_max)
            c.gamma_max_db = *o.gamma_max;
        if (o.gamma_step)
            c.gamma_step_db = *o.gamma_step;
        if (o.scenario == "1")
            c.scenarios = {1};
        else if (o.scenario == "2")
            c.scenarios = {2};
        else if (o.scenario == "both")
            c.scenarios = {1, 2};
        if (!o.out.empty())
            c.output = o.out;
        if (o.fixed_users)
            c.fixed_users = true;
        c.validate();
        return c;
    }

    void print_link_budget(const mbsat::LinkBudget &b)
    {
        const auto with = mbsat::transmit_snr(b, true);
        const auto without = mbsat::transmit_snr(b, false);
        std::cout << std::fixed << std::setprecision(2)
                  << "  terminal RF power       " << std::setw(9) << b.tx_power_dbw << " dBW\n"
                  << "+ terminal antenna gain   " << std::setw(9) << b.tx_antenna_gain_db << " dB\n"
                  << "- free space loss         " << std::setw(9) << b.free_space_loss_db << " dB\n"
                  << "- atmospheric loss        " << std::setw(9) << b.atmospheric_loss_db << " dB\n"
                  << "- fading margin           " << std::setw(9) << b.fading_margin_db << " dB\n"
                  << "- receiver noise power    " << std::setw(9) << b.noise_power_dbw << " dBW\n"
                  << "= gamma (B carries peak)  " << std::setw(9) << without.gamma_db << " dB\n"
                  << "+ max satellite gain      " << std::setw(9) << b.max_sat_gain_dbi << " dBi\n"
                  << "= gamma (unit-peak B)     " << std::setw(9) << with.gamma_db << " dB\n"
                  << "  user link bandwidth     " << std::setw(9) << b.user_bandwidth_hz / 1e6 << " MHz\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Return-link capacity of multibeam mobile satellite systems"};
    app.require_subcommand(1);

    Overrides sim_o, bnd_o, lay_o, lb_o;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo sweep of every system over the SNR grid");
    add_common(simulate, sim_o, true);
    auto *bounds = app.add_subcommand("bounds", "Analytic lower bounds and high-SNR asymptote, no Monte Carlo");
    add_common(bounds, bnd_o, false);
    auto *layout = app.add_subcommand("layout", "Export beam centers, one user drop and the color plan");
    add_common(layout, lay_o, false);
    auto *linkbudget = app.add_subcommand("linkbudget", "Print the transmit SNR derivation");
    linkbudget->add_option("--config", lb_o.config_path, "JSON run configuration")->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (simulate->parsed())
        {
            const auto cfg = resolve(sim_o);
            const auto result = mbsat::run_sweep(cfg, sim_o.threads);
            mbsat::emit_csv(result, cfg.output);
            if (result.system_index(mbsat::SystemTag::conventional))
                mbsat::print_summary(std::cout, mbsat::summarize(result));
            std::cout << "wrote " << cfg.output << '\n';
        }
        else if (bounds->parsed())
        {
            const auto cfg = resolve(bnd_o);
            const auto result = mbsat::run_bounds(cfg);
            mbsat::emit_csv(result, cfg.output);
            std::cout << "wrote " << cfg.output << '\n';
        }
        else if (layout->parsed())
        {
            auto cfg = resolve(lay_o);
            const mbsat::SweepContext ctx(cfg);
            auto rng = mbsat::derive_stream(cfg.seed, cfg.fixed_users ? mbsat::fixed_users_stream : 0);
            const auto users = mbsat::drop_users(ctx.grid, rng);
            const bool s2_only = cfg.scenarios.size() == 1 && cfg.scenarios.front() == 2;
            const auto &plan = s2_only ? *ctx.plan_s2 : ctx.plan_s1;
            const std::string path = lay_o.out.empty() ? "layout.csv" : lay_o.out;
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot open " + path + " for writing");
            mbsat::write_layout_csv(f, ctx.grid, users, &plan);
            std::cout << "wrote " << path << '\n';
        }
        else if (linkbudget->parsed())
        {
            const auto cfg = lb_o.config_path.empty() ? mbsat::RunConfig{} : mbsat::load_config(lb_o.config_path);
            print_link_budget(cfg.link_budget);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

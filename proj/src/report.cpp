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

#include "mbsat/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

namespace mbsat
{
    namespace
    {
        std::string fmt9(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.9g", v);
            return buf;
        }

        std::optional<double> ratio(const SweepResult &r, SystemTag num, SystemTag den, std::size_t g)
        {
            const auto a = r.system_index(num), b = r.system_index(den);
            if (!a || !b)
                return std::nullopt;
            return r.stats[*a][g].mean / r.stats[*b][g].mean;
        }
    }

    SweepSummary summarize(const SweepResult &result)
    {
        const bool has_conv = result.system_index(SystemTag::conventional).has_value();
        const bool has_mud = result.system_index(SystemTag::full_mud) || result.system_index(SystemTag::clustered_s1) ||
                             result.system_index(SystemTag::clustered_s2);
        if (!has_conv || !has_mud)
        {
            std::string missing;
            if (!has_conv)
                missing += " conventional";
            if (!has_mud)
                missing += " full_mud|clustered_s1|clustered_s2";
            throw std::invalid_argument("summarize: missing systems:" + missing);
        }

        SweepSummary s;
        for (std::size_t g = 0; g < result.gamma_db.size(); ++g)
        {
            SweepSummary::Row row;
            row.gamma_db = result.gamma_db[g];
            row.full_over_conventional = ratio(result, SystemTag::full_mud, SystemTag::conventional, g);
            row.s1_over_conventional = ratio(result, SystemTag::clustered_s1, SystemTag::conventional, g);
            row.s2_over_conventional = ratio(result, SystemTag::clustered_s2, SystemTag::conventional, g);
            row.s2_over_s1 = ratio(result, SystemTag::clustered_s2, SystemTag::clustered_s1, g);
            if (!s.crossover_s1_db && row.s1_over_conventional && *row.s1_over_conventional >= 1.25)
                s.crossover_s1_db = row.gamma_db;
            if (!s.crossover_s2_db && row.s2_over_conventional && *row.s2_over_conventional >= 1.25)
                s.crossover_s2_db = row.gamma_db;
            s.rows.push_back(row);
        }

        const std::size_t n = result.gamma_db.size();
        if (n >= 2)
        {
            const double dg = result.gamma_db[n - 1] - result.gamma_db[n - 2];
            for (std::size_t k = 0; k < result.systems.size(); ++k)
                s.high_snr_slopes.emplace_back(result.systems[k],
                                               (result.stats[k][n - 1].mean - result.stats[k][n - 2].mean) / dg);
        }
        return s;
    }

    void print_summary(std::ostream &os, const SweepSummary &summary)
    {
        auto opt = [](const std::optional<double> &v) { return v ? fmt9(*v) : std::string("-"); };
        os << "gamma_db  full/conv  s1/conv  s2/conv  s2/s1\n";
        for (const auto &r : summary.rows)
            os << std::setw(8) << r.gamma_db << "  " << opt(r.full_over_conventional) << "  "
               << opt(r.s1_over_conventional) << "  " << opt(r.s2_over_conventional) << "  " << opt(r.s2_over_s1)
               << '\n';
        os << "clustered_s1 >= 1.25 x conventional from gamma = " << opt(summary.crossover_s1_db) << " dB\n";
        os << "clustered_s2 >= 1.25 x conventional from gamma = " << opt(summary.crossover_s2_db) << " dB\n";
        for (const auto &[tag, slope] : summary.high_snr_slopes)
            os << "high-SNR slope " << to_string(tag) << ": " << fmt9(slope) << " bit/s/Hz per dB\n";
    }

    void write_sweep_csv(std::ostream &os, const SweepResult &result)
    {
        os << "gamma_db,system,mean_se_bps_hz,std_se,ci95_half,throughput_mbps\n";
        std::vector<std::size_t> order(result.systems.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return to_string(result.systems[a]) < to_string(result.systems[b]); });
        std::vector<std::size_t> gorder(result.gamma_db.size());
        std::iota(gorder.begin(), gorder.end(), 0);
        std::sort(gorder.begin(), gorder.end(), [&](std::size_t a, std::size_t b) { return result.gamma_db[a] < result.gamma_db[b]; });

        for (std::size_t s : order)
            for (std::size_t g : gorder)
            {
                const auto &st = result.stats[s][g];
                os << fmt9(result.gamma_db[g]) << ',' << to_string(result.systems[s]) << ',' << fmt9(st.mean) << ','
                   << fmt9(st.std) << ',' << fmt9(st.ci95_half) << ','
                   << fmt9(throughput(st.mean, LinkBudget{.user_bandwidth_hz = result.user_bandwidth_hz}) / 1e6) << '\n';
            }
    }

    void emit_csv(const SweepResult &result, const std::filesystem::path &path)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("emit_csv: cannot open " + path.string() + " for writing");
        write_sweep_csv(f, result);
        f.flush();
        if (!f)
            throw std::runtime_error("emit_csv: write failed for " + path.string());
    }

    SweepResult parse_csv(std::istream &is, double user_bandwidth_hz)
    {
        SweepResult r;
        r.user_bandwidth_hz = user_bandwidth_hz;
        std::string line;
        if (!std::getline(is, line) || line != "gamma_db,system,mean_se_bps_hz,std_se,ci95_half,throughput_mbps")
            throw std::runtime_error("parse_csv: unexpected header");
        std::size_t line_no = 1;
        while (std::getline(is, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            std::stringstream ss(line);
            std::string cell[6];
            for (auto &c : cell)
                if (!std::getline(ss, c, ','))
                    throw std::runtime_error("parse_csv: short row at line " + std::to_string(line_no));
            const auto tag = parse_system_tag(cell[1]);
            if (!tag)
                throw std::runtime_error("parse_csv: unknown system '" + cell[1] + "' at line " + std::to_string(line_no));
            const double g = std::stod(cell[0]);

            auto s = r.system_index(*tag);
            if (!s)
            {
                r.systems.push_back(*tag);
                r.stats.emplace_back();
                s = r.systems.size() - 1;
            }
            auto k = r.gamma_index(g);
            if (!k)
            {
                r.gamma_db.push_back(g);
                for (auto &col : r.stats)
                    col.resize(r.gamma_db.size());
                k = r.gamma_db.size() - 1;
            }
            r.stats[*s].resize(r.gamma_db.size());
            r.stats[*s][*k] = SystemStats{std::stod(cell[2]), std::stod(cell[3]), std::stod(cell[4]), 0};
        }
        return r;
    }

    void write_layout_csv(std::ostream &os, const BeamGrid &grid, const UserSet &users, const ColorPlan *plan)
    {
        os << "beam_id,center_x_deg,center_y_deg,user_x_deg,user_y_deg" << (plan ? ",color_id" : "") << '\n';
        for (std::size_t b = 0; b < grid.size(); ++b)
        {
            const auto &c = grid.beam_centers[b];
            const auto &u = users.positions[b];
            os << b << ',' << fmt9(c.x_deg) << ',' << fmt9(c.y_deg) << ',' << fmt9(u.x_deg) << ',' << fmt9(u.y_deg);
            if (plan)
                os << ',' << plan->color_of[b];
            os << '\n';
        }
    }
}

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

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace mbsat
{
    namespace
    {
        using nlohmann::json;

        void reject_unknown(const json &j, const std::set<std::string> &known, const std::string &where)
        {
            for (auto it = j.begin(); it != j.end(); ++it)
                if (!known.contains(it.key()))
                    throw std::invalid_argument("config: unknown field '" + where + it.key() + "'");
        }

        template <typename T>
        void get_if(const json &j, const char *key, T &dst)
        {
            if (j.contains(key))
                dst = j.at(key).get<T>();
        }
    }

    RunConfig config_from_json_text(const std::string &text)
    {
        RunConfig c;
        json j;
        try
        {
            j = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw std::invalid_argument(std::string("config: ") + e.what());
        }
        if (!j.is_object())
            throw std::invalid_argument("config: top level must be an object");

        reject_unknown(j,
                       {"rows", "cols", "theta_3db_deg", "fading", "link_budget", "normalize_beam_gain", "gain_floor_db",
                        "gamma_min_db", "gamma_max_db", "gamma_step_db", "iterations", "seed", "scenarios", "systems",
                        "fixed_users", "output"},
                       "");
        try
        {
            get_if(j, "rows", c.rows);
            get_if(j, "cols", c.cols);
            get_if(j, "theta_3db_deg", c.theta_3db_deg);
            get_if(j, "normalize_beam_gain", c.normalize_beam_gain);
            if (j.contains("gain_floor_db") && !j.at("gain_floor_db").is_null())
                c.gain_floor_db = j.at("gain_floor_db").get<double>();
            get_if(j, "gamma_min_db", c.gamma_min_db);
            get_if(j, "gamma_max_db", c.gamma_max_db);
            get_if(j, "gamma_step_db", c.gamma_step_db);
            get_if(j, "iterations", c.iterations);
            get_if(j, "seed", c.seed);
            get_if(j, "scenarios", c.scenarios);
            get_if(j, "fixed_users", c.fixed_users);
            get_if(j, "output", c.output);

            if (j.contains("fading"))
            {
                const auto &f = j.at("fading");
                reject_unknown(f, {"k_factor_db", "mu_m", "sigma_m"}, "fading.");
                get_if(f, "k_factor_db", c.fading.k_factor_db);
                get_if(f, "mu_m", c.fading.mu_m);
                get_if(f, "sigma_m", c.fading.sigma_m);
            }
            if (j.contains("link_budget"))
            {
                const auto &l = j.at("link_budget");
                auto &b = c.link_budget;
                reject_unknown(l,
                               {"tx_power_dbw", "tx_antenna_gain_db", "max_sat_gain_dbi", "free_space_loss_db",
                                "atmospheric_loss_db", "fading_margin_db", "noise_power_dbw", "user_bandwidth_hz"},
                               "link_budget.");
                get_if(l, "tx_power_dbw", b.tx_power_dbw);
                get_if(l, "tx_antenna_gain_db", b.tx_antenna_gain_db);
                get_if(l, "max_sat_gain_dbi", b.max_sat_gain_dbi);
                get_if(l, "free_space_loss_db", b.free_space_loss_db);
                get_if(l, "atmospheric_loss_db", b.atmospheric_loss_db);
                get_if(l, "fading_margin_db", b.fading_margin_db);
                get_if(l, "noise_power_dbw", b.noise_power_dbw);
                get_if(l, "user_bandwidth_hz", b.user_bandwidth_hz);
            }
            if (j.contains("systems"))
            {
                c.systems.clear();
                for (const auto &name : j.at("systems").get<std::vector<std::string>>())
                {
                    const auto tag = parse_system_tag(name);
                    if (!tag)
                        throw std::invalid_argument("config: unknown system '" + name + "'");
                    c.systems.push_back(*tag);
                }
            }
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument(std::string("config: ") + e.what());
        }
        c.validate();
        return c;
    }

    RunConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream f(path);
        if (!f)
            throw std::runtime_error("config: cannot open " + path.string());
        std::stringstream ss;
        ss << f.rdbuf();
        return config_from_json_text(ss.str());
    }

    std::string config_to_json_text(const RunConfig &c)
    {
        json j;
        j["rows"] = c.rows;
        j["cols"] = c.cols;
        j["theta_3db_deg"] = c.theta_3db_deg;
        j["fading"] = {{"k_factor_db", c.fading.k_factor_db}, {"mu_m", c.fading.mu_m}, {"sigma_m", c.fading.sigma_m}};
        const auto &b = c.link_budget;
        j["link_budget"] = {{"tx_power_dbw", b.tx_power_dbw},
                            {"tx_antenna_gain_db", b.tx_antenna_gain_db},
                            {"max_sat_gain_dbi", b.max_sat_gain_dbi},
                            {"free_space_loss_db", b.free_space_loss_db},
                            {"atmospheric_loss_db", b.atmospheric_loss_db},
                            {"fading_margin_db", b.fading_margin_db},
                            {"noise_power_dbw", b.noise_power_dbw},
                            {"user_bandwidth_hz", b.user_bandwidth_hz}};
        j["normalize_beam_gain"] = c.normalize_beam_gain;
        j["gain_floor_db"] = std::isfinite(c.gain_floor_db) ? json(c.gain_floor_db) : json(nullptr);
        j["gamma_min_db"] = c.gamma_min_db;
        j["gamma_max_db"] = c.gamma_max_db;
        j["gamma_step_db"] = c.gamma_step_db;
        j["iterations"] = c.iterations;
        j["seed"] = c.seed;
        j["scenarios"] = c.scenarios;
        std::vector<std::string> names;
        for (auto t : c.systems)
            names.emplace_back(to_string(t));
        j["systems"] = names;
        j["fixed_users"] = c.fixed_users;
        j["output"] = c.output;
        return j.dump(2);
    }
}

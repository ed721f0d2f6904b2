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

#ifndef MBSAT_HARNESS_HPP
#define MBSAT_HARNESS_HPP

#include "mbsat/capacity.hpp"
#include "mbsat/channel.hpp"
#include "mbsat/coloring.hpp"
#include "mbsat/geometry.hpp"
#include "mbsat/linkbudget.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbsat
{
    struct RunConfig
    {
        int rows = 10;
        int cols = 10;
        double theta_3db_deg = 0.4;
        FadingParams fading;
        LinkBudget link_budget; // max_sat_gain_dbi is also the beam peak gain
        bool normalize_beam_gain = false;
        double gain_floor_db = -std::numeric_limits<double>::infinity();
        double gamma_min_db = -5.0;
        double gamma_max_db = 45.0;
        double gamma_step_db = 2.5;
        int iterations = 1000;
        std::uint64_t seed = 42;
        std::vector<int> scenarios = {1, 2};
        std::vector<SystemTag> systems = {SystemTag::full_mud,     SystemTag::clustered_s1,    SystemTag::clustered_s2,
                                          SystemTag::conventional, SystemTag::lb_full,         SystemTag::lb_clustered_s1,
                                          SystemTag::lb_clustered_s2, SystemTag::asymptote};
        bool fixed_users = false;
        std::string output = "sweep.csv";

        void validate() const;
        std::vector<double> gamma_grid_db() const;
        // Requested systems that the selected scenarios can produce, in request order.
        std::vector<SystemTag> effective_systems() const;
        GainOptions gain_options() const;
    };

    struct SystemStats
    {
        double mean = 0.0;
        double std = 0.0;       // sample standard deviation
        double ci95_half = 0.0; // 1.96 std / sqrt(count)
        std::size_t count = 0;
    };

    struct SweepResult
    {
        std::vector<double> gamma_db;
        std::vector<SystemTag> systems;
        std::vector<std::vector<SystemStats>> stats; // [system][gamma]
        double user_bandwidth_hz = 15e6;

        std::optional<std::size_t> system_index(SystemTag tag) const;
        std::optional<std::size_t> gamma_index(double gamma_db) const;
        const SystemStats &at(SystemTag tag, double gamma_db) const;
    };

    // An evaluator failed; carries what is needed to replay the iteration.
    class NumericFailure : public std::runtime_error
    {
      public:
        NumericFailure(const std::string &what, std::size_t iteration, std::uint64_t seed);
        std::size_t iteration() const { return iteration_; }
        std::uint64_t seed() const { return seed_; }

      private:
        std::size_t iteration_;
        std::uint64_t seed_;
    };

    // Counter-based stream for one iteration: depends only on (seed, index).
    std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index);
    inline constexpr std::uint64_t fixed_users_stream = std::numeric_limits<std::uint64_t>::max();

    // Shared, read-only state of a sweep.
    struct SweepContext
    {
        RunConfig config;
        BeamGrid grid;
        ColorPlan plan_s1;
        std::optional<ColorPlan> plan_s2;
        std::vector<SnrPoint> gammas;
        std::vector<SystemTag> systems;
        std::optional<UserSet> fixed_users;

        explicit SweepContext(const RunConfig &cfg);
    };

    // All evaluator outputs for one Monte Carlo iteration, laid out [system][gamma].
    // Users, B and fading are drawn once and shared by every system and gamma point.
    std::vector<double> evaluate_iteration(const SweepContext &ctx, std::size_t iteration);

    // Reference implementation: iterations in order on the calling thread.
    SweepResult run_sweep_serial(const RunConfig &config);

    // OpenMP over iterations. threads == 0 uses the OpenMP default.
    // Bitwise identical to run_sweep_serial for any thread count.
    SweepResult run_sweep(const RunConfig &config, int threads = 0);

    // Analytic quantities only (bounds and asymptote) for the user drop of iteration 0.
    SweepResult run_bounds(const RunConfig &config);

    // Per-gamma ratios, 25% crossover and high-SNR slopes.
    struct SweepSummary
    {
        struct Row
        {
            double gamma_db = 0.0;
            std::optional<double> full_over_conventional;
            std::optional<double> s1_over_conventional;
            std::optional<double> s2_over_conventional;
            std::optional<double> s2_over_s1;
        };
        std::vector<Row> rows;
        std::optional<double> crossover_s1_db; // first gamma with clustered_s1 >= 1.25 conventional
        std::optional<double> crossover_s2_db;
        std::vector<std::pair<SystemTag, double>> high_snr_slopes; // bit/s/Hz per dB, top two gamma points
    };

    SweepSummary summarize(const SweepResult &result);
    void print_summary(std::ostream &os, const SweepSummary &summary);

    void write_sweep_csv(std::ostream &os, const SweepResult &result);
    void emit_csv(const SweepResult &result, const std::filesystem::path &path);
    // Inverse of emit_csv; counts are not stored in the file and come back as 0.
    SweepResult parse_csv(std::istream &is, double user_bandwidth_hz = 15e6);

    // beam_id,center_x_deg,center_y_deg,user_x_deg,user_y_deg[,color_id]
    void write_layout_csv(std::ostream &os, const BeamGrid &grid, const UserSet &users, const ColorPlan *plan = nullptr);

    RunConfig config_from_json_text(const std::string &text);
    RunConfig load_config(const std::filesystem::path &path);
    std::string config_to_json_text(const RunConfig &config);
}

#endif

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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

namespace mbsat
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }

        bool is_s1(SystemTag t)
        {
            return t == SystemTag::clustered_s1 || t == SystemTag::lb_clustered_s1;
        }

        bool is_s2(SystemTag t)
        {
            return t == SystemTag::clustered_s2 || t == SystemTag::lb_clustered_s2;
        }

        // Pairwise summation over a fixed index order.
        double pairwise_sum(const double *x, std::size_t n)
        {
            if (n <= 8)
            {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    s += x[i];
                return s;
            }
            const std::size_t h = n / 2;
            return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
        }

        SystemStats stats_of(const std::vector<double> &samples)
        {
            SystemStats s;
            s.count = samples.size();
            const double n = static_cast<double>(s.count);
            s.mean = pairwise_sum(samples.data(), samples.size()) / n;
            if (s.count > 1)
            {
                std::vector<double> dev(samples.size());
                for (std::size_t i = 0; i < samples.size(); ++i)
                    dev[i] = (samples[i] - s.mean) * (samples[i] - s.mean);
                s.std = std::sqrt(pairwise_sum(dev.data(), dev.size()) / (n - 1.0));
                s.ci95_half = 1.96 * s.std / std::sqrt(n);
            }
            return s;
        }

        SweepResult aggregate(const SweepContext &ctx, const std::vector<std::vector<double>> &per_iteration)
        {
            SweepResult r;
            r.user_bandwidth_hz = ctx.config.link_budget.user_bandwidth_hz;
            for (const auto &g : ctx.gammas)
                r.gamma_db.push_back(g.gamma_db);
            r.systems = ctx.systems;
            const std::size_t n_gamma = ctx.gammas.size();
            std::vector<double> column(per_iteration.size());
            r.stats.resize(r.systems.size());
            for (std::size_t s = 0; s < r.systems.size(); ++s)
                for (std::size_t g = 0; g < n_gamma; ++g)
                {
                    for (std::size_t it = 0; it < per_iteration.size(); ++it)
                        column[it] = per_iteration[it][s * n_gamma + g];
                    r.stats[s].push_back(stats_of(column));
                }
            return r;
        }

        // ln det(B B^H) or 0-valued bound when singular
        double bound_or_zero(const std::optional<double> &ln_det, Eigen::Index m, double offset, double gamma_lin)
        {
            return ln_det ? lower_bound_value(*ln_det, m, offset, gamma_lin) : 0.0;
        }
    }

    NumericFailure::NumericFailure(const std::string &what, std::size_t iteration, std::uint64_t seed)
        : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ", seed " + std::to_string(seed) + ")"),
          iteration_(iteration), seed_(seed)
    {
    }

    std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index)
    {
        return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0xD1B54A32D192ED03ULL)));
    }

    void RunConfig::validate() const
    {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("config: rows and cols must be >= 1");
        if (!(theta_3db_deg > 0.0))
            throw std::invalid_argument("config: theta_3db_deg must be > 0");
        fading.validate();
        link_budget.validate();
        if (iterations < 1)
            throw std::invalid_argument("config: iterations must be >= 1");
        if (!(gamma_step_db > 0.0))
            throw std::invalid_argument("config: gamma_step_db must be > 0");
        if (!std::isfinite(gamma_min_db) || !std::isfinite(gamma_max_db) || gamma_max_db < gamma_min_db)
            throw std::invalid_argument("config: gamma grid is empty (gamma_max_db < gamma_min_db)");
        if (scenarios.empty())
            throw std::invalid_argument("config: at least one scenario is required");
        for (int s : scenarios)
            if (s != 1 && s != 2)
                throw std::invalid_argument("config: scenarios must be 1 and/or 2, got " + std::to_string(s));
        if (rows % 2 != 0 || cols % 2 != 0)
            throw std::invalid_argument("config: rows and cols must be even for 4-color plans");
    }

    std::vector<double> RunConfig::gamma_grid_db() const
    {
        std::vector<double> g;
        for (int k = 0;; ++k)
        {
            const double v = gamma_min_db + k * gamma_step_db;
            if (v > gamma_max_db + 1e-9 * gamma_step_db)
                break;
            g.push_back(v);
        }
        return g;
    }

    std::vector<SystemTag> RunConfig::effective_systems() const
    {
        const bool has1 = std::find(scenarios.begin(), scenarios.end(), 1) != scenarios.end();
        const bool has2 = std::find(scenarios.begin(), scenarios.end(), 2) != scenarios.end();
        std::vector<SystemTag> out;
        for (SystemTag t : systems)
        {
            if ((is_s1(t) && !has1) || (is_s2(t) && !has2))
                continue;
            if (std::find(out.begin(), out.end(), t) == out.end())
                out.push_back(t);
        }
        return out;
    }

    GainOptions RunConfig::gain_options() const
    {
        return {normalize_beam_gain, gain_floor_db};
    }

    std::optional<std::size_t> SweepResult::system_index(SystemTag tag) const
    {
        for (std::size_t i = 0; i < systems.size(); ++i)
            if (systems[i] == tag)
                return i;
        return std::nullopt;
    }

    std::optional<std::size_t> SweepResult::gamma_index(double g) const
    {
        for (std::size_t i = 0; i < gamma_db.size(); ++i)
            if (std::abs(gamma_db[i] - g) < 1e-9)
                return i;
        return std::nullopt;
    }

    const SystemStats &SweepResult::at(SystemTag tag, double g) const
    {
        const auto s = system_index(tag);
        const auto k = gamma_index(g);
        if (!s || !k)
            throw std::out_of_range("SweepResult: no entry for " + std::string(to_string(tag)) + " at " +
                                    std::to_string(g) + " dB");
        return stats[*s][*k];
    }

    SweepContext::SweepContext(const RunConfig &cfg) : config(cfg)
    {
        config.validate();
        grid = build_beam_grid(config.rows, config.cols, config.theta_3db_deg, config.link_budget.max_sat_gain_dbi);
        plan_s1 = color_scenario1(grid);
        plan_s2 = color_scenario2(grid);
        for (double g : config.gamma_grid_db())
            gammas.push_back(SnrPoint::from_db(g));
        systems = config.effective_systems();
        if (config.fixed_users)
        {
            auto rng = derive_stream(config.seed, fixed_users_stream);
            fixed_users = drop_users(grid, rng);
        }
    }

    std::vector<double> evaluate_iteration(const SweepContext &ctx, std::size_t iteration)
    {
        const std::size_t n_gamma = ctx.gammas.size();
        std::vector<double> out(ctx.systems.size() * n_gamma, 0.0);
        const auto &params = ctx.config.fading;
        const double offset = fading_log_offset(params);

        auto rng = derive_stream(ctx.config.seed, iteration);
        const UserSet users = ctx.fixed_users ? *ctx.fixed_users : drop_users(ctx.grid, rng);
        const GainMatrix b = beam_gain_matrix(ctx.grid, users, ctx.config.gain_options());
        const FadingDraw fading = sample_fading(ctx.grid.size(), params, rng);
        const ChannelRealization full = assemble_channel(b, fading.h, fading.xi);

        // per-cluster sums of log-det capacity and bound for one plan
        auto clustered = [&](const ColorPlan &plan, double *cap, double *lb) {
            for (const auto &beams : plan.clusters)
            {
                if (cap)
                {
                    const ChannelRealization zc = restrict_channel(full, beams);
                    const Eigen::MatrixXcd gram = zc.z.adjoint() * zc.z;
                    for (std::size_t g = 0; g < n_gamma; ++g)
                        cap[g] += log2det_identity_plus(gram, ctx.gammas[g].gamma_lin);
                }
                if (lb)
                {
                    const auto ln_det = log_det_gram(restrict_gain(b, beams));
                    const auto m = static_cast<Eigen::Index>(beams.size());
                    for (std::size_t g = 0; g < n_gamma; ++g)
                        lb[g] += bound_or_zero(ln_det, m, offset, ctx.gammas[g].gamma_lin);
                }
            }
        };

        auto slot = [&](SystemTag t) -> double * {
            for (std::size_t s = 0; s < ctx.systems.size(); ++s)
                if (ctx.systems[s] == t)
                    return out.data() + s * n_gamma;
            return nullptr;
        };

        if (double *dst = slot(SystemTag::full_mud))
        {
            const Eigen::MatrixXcd gram = full.z.adjoint() * full.z;
            for (std::size_t g = 0; g < n_gamma; ++g)
                dst[g] = log2det_identity_plus(gram, ctx.gammas[g].gamma_lin);
        }
        if (double *dst = slot(SystemTag::conventional))
            for (std::size_t g = 0; g < n_gamma; ++g)
                dst[g] = conventional_se(ctx.plan_s1, full.z, ctx.gammas[g]).value;

        double *cap1 = slot(SystemTag::clustered_s1), *lb1 = slot(SystemTag::lb_clustered_s1);
        if (cap1 || lb1)
            clustered(ctx.plan_s1, cap1, lb1);
        double *cap2 = slot(SystemTag::clustered_s2), *lb2 = slot(SystemTag::lb_clustered_s2);
        if ((cap2 || lb2) && ctx.plan_s2)
            clustered(*ctx.plan_s2, cap2, lb2);

        double *lbf = slot(SystemTag::lb_full);
        double *asym = slot(SystemTag::asymptote);
        if (lbf || asym)
        {
            const auto ln_det = log_det_gram(b);
            const auto m = b.rows();
            if (asym && !ln_det)
                throw std::domain_error("asymptote: B B^H is singular");
            for (std::size_t g = 0; g < n_gamma; ++g)
            {
                if (lbf)
                    lbf[g] = bound_or_zero(ln_det, m, offset, ctx.gammas[g].gamma_lin);
                if (asym)
                    asym[g] = static_cast<double>(m) * std::log2(ctx.gammas[g].gamma_lin) +
                              (*ln_det + static_cast<double>(m) * offset) / std::numbers::ln2;
            }
        }

        for (double v : out)
            if (!std::isfinite(v))
                throw std::runtime_error("non-finite spectral efficiency");
        return out;
    }

    SweepResult run_sweep_serial(const RunConfig &config)
    {
        const SweepContext ctx(config);
        const auto n = static_cast<std::size_t>(config.iterations);
        std::vector<std::vector<double>> samples(n);
        for (std::size_t it = 0; it < n; ++it)
        {
            try
            {
                samples[it] = evaluate_iteration(ctx, it);
            }
            catch (const std::exception &e)
            {
                throw NumericFailure(e.what(), it, config.seed);
            }
        }
        return aggregate(ctx, samples);
    }

    SweepResult run_sweep(const RunConfig &config, int threads)
    {
        const SweepContext ctx(config);
        const auto n = static_cast<std::int64_t>(config.iterations);
        std::vector<std::vector<double>> samples(static_cast<std::size_t>(n));
        std::vector<std::string> errors(static_cast<std::size_t>(n));
        const int n_threads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
        for (std::int64_t it = 0; it < n; ++it)
        {
            try
            {
                samples[static_cast<std::size_t>(it)] = evaluate_iteration(ctx, static_cast<std::size_t>(it));
            }
            catch (const std::exception &e)
            {
                errors[static_cast<std::size_t>(it)] = e.what();
            }
        }

        // Report the lowest failing iteration so the error does not depend on scheduling.
        for (std::size_t it = 0; it < errors.size(); ++it)
            if (!errors[it].empty())
                throw NumericFailure(errors[it], it, config.seed);
        return aggregate(ctx, samples);
    }

    SweepResult run_bounds(const RunConfig &config)
    {
        RunConfig cfg = config;
        std::vector<SystemTag> keep;
        for (SystemTag t : cfg.systems)
            if (t == SystemTag::lb_full || t == SystemTag::lb_clustered_s1 || t == SystemTag::lb_clustered_s2 ||
                t == SystemTag::asymptote)
                keep.push_back(t);
        cfg.systems = keep;
        cfg.iterations = 1;
        const SweepContext ctx(cfg);
        try
        {
            return aggregate(ctx, {evaluate_iteration(ctx, 0)});
        }
        catch (const std::exception &e)
        {
            throw NumericFailure(e.what(), 0, cfg.seed);
        }
    }
}

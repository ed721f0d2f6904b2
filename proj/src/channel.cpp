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

#include "mbsat/channel.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>
#include <string>

namespace mbsat
{
    double FadingParams::k_linear() const
    {
        return std::pow(10.0, k_factor_db / 10.0);
    }

    void FadingParams::validate() const
    {
        if (std::isnan(k_factor_db) || k_factor_db == -std::numeric_limits<double>::infinity())
            throw std::invalid_argument("FadingParams: Rician factor must be > 0 in linear scale");
        if (!std::isfinite(mu_m))
            throw std::invalid_argument("FadingParams: mu_m must be finite");
        if (!(sigma_m >= 0.0) || !std::isfinite(sigma_m))
            throw std::invalid_argument("FadingParams: sigma_m must be finite and >= 0");
    }

    std::complex<double> sample_rician(const FadingParams &params, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> gauss(0.0, 1.0);
        const double re = gauss(rng), im = gauss(rng);
        const double k = params.k_linear();
        if (std::isinf(k))
            return {1.0, 0.0};
        const double los = std::sqrt(k / (k + 1.0));
        const double scat = std::sqrt(1.0 / (k + 1.0)) * std::sqrt(0.5);
        return {los + scat * re, scat * im};
    }

    double sample_shadowing(const FadingParams &params, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> gauss(0.0, 1.0);
        return std::exp(params.mu_m + params.sigma_m * gauss(rng));
    }

    FadingDraw sample_fading(std::size_t n_users, const FadingParams &params, std::mt19937_64 &rng)
    {
        const auto n = static_cast<Eigen::Index>(n_users);
        FadingDraw d{Eigen::VectorXcd(n), Eigen::VectorXd(n)};
        for (Eigen::Index j = 0; j < n; ++j)
            d.h(j) = sample_rician(params, rng);
        for (Eigen::Index j = 0; j < n; ++j)
            d.xi(j) = sample_shadowing(params, rng);
        return d;
    }

    ChannelRealization assemble_channel(const GainMatrix &b, const Eigen::VectorXcd &h, const Eigen::VectorXd &xi)
    {
        if (h.size() != b.cols() || xi.size() != b.cols())
            throw std::invalid_argument("assemble_channel: fading vectors must have one entry per user (column of b)");
        if ((xi.array() <= 0.0).any())
            throw std::invalid_argument("assemble_channel: shadowing gains must be positive");

        ChannelRealization r;
        r.b = b;
        r.h = h;
        r.xi = xi;
        const Eigen::VectorXcd col_scale = h.array() * xi.array().sqrt().cast<std::complex<double>>();
        r.z = b.cast<std::complex<double>>() * col_scale.asDiagonal();
        return r;
    }

    GainMatrix restrict_gain(const GainMatrix &b, std::span<const std::size_t> beams)
    {
        const auto n = static_cast<Eigen::Index>(beams.size());
        GainMatrix out(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                out(i, j) = b(static_cast<Eigen::Index>(beams[i]), static_cast<Eigen::Index>(beams[j]));
        return out;
    }

    ChannelRealization restrict_channel(const ChannelRealization &full, std::span<const std::size_t> beams)
    {
        const auto n = static_cast<Eigen::Index>(beams.size());
        ChannelRealization r;
        r.b = restrict_gain(full.b, beams);
        r.z.resize(n, n);
        r.h.resize(n);
        r.xi.resize(n);
        for (Eigen::Index j = 0; j < n; ++j)
        {
            const auto jj = static_cast<Eigen::Index>(beams[j]);
            r.h(j) = full.h(jj);
            r.xi(j) = full.xi(jj);
            for (Eigen::Index i = 0; i < n; ++i)
                r.z(i, j) = full.z(static_cast<Eigen::Index>(beams[i]), jj);
        }
        return r;
    }

    ChannelRealization cluster_channel(const BeamGrid &grid, const UserSet &users, const ColorPlan &plan, int color,
                                       const FadingParams &params, std::mt19937_64 &rng, const GainOptions &opts)
    {
        if (color < 0 || color >= plan.n_colors)
            throw std::invalid_argument("cluster_channel: color " + std::to_string(color) + " out of range");
        const auto &beams = plan.clusters[static_cast<std::size_t>(color)];

        // Gain only for the cluster's feeds and users.
        BeamGrid sub_grid = grid;
        sub_grid.beam_centers.clear();
        UserSet sub_users;
        for (std::size_t b : beams)
        {
            sub_grid.beam_centers.push_back(grid.beam_centers[b]);
            sub_users.positions.push_back(users.positions[b]);
            sub_users.home_beam.push_back(sub_users.home_beam.size());
        }
        const GainMatrix b = beam_gain_matrix(sub_grid, sub_users, opts);
        const FadingDraw f = sample_fading(beams.size(), params, rng);
        return assemble_channel(b, f.h, f.xi);
    }

    void write_realization_csv(std::ostream &os, const ChannelRealization &r)
    {
        os << std::setprecision(17);
        for (Eigen::Index i = 0; i < r.z.rows(); ++i)
        {
            for (Eigen::Index j = 0; j < r.z.cols(); ++j)
            {
                if (j > 0)
                    os << ',';
                os << r.z(i, j).real() << ',' << r.z(i, j).imag();
            }
            os << '\n';
        }
    }
}

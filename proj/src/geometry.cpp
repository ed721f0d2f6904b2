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

#include "mbsat/geometry.hpp"
#include "mbsat/mathkit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbsat
{
    namespace
    {
        constexpr double deg2rad = std::numbers::pi / 180.0;
        constexpr double pattern_u_scale = 2.07123;
    }

    double angular_distance_deg(const AngularPoint &a, const AngularPoint &b)
    {
        return std::hypot(a.x_deg - b.x_deg, a.y_deg - b.y_deg);
    }

    double BeamGrid::spacing_deg() const
    {
        return std::sqrt(3.0) * theta_3db_deg;
    }

    double BeamGrid::g_max_linear() const
    {
        return std::pow(10.0, g_max_db / 10.0);
    }

    std::vector<std::size_t> BeamGrid::lattice_neighbors(std::size_t beam) const
    {
        const int r = row_of(beam), c = col_of(beam);
        // Odd rows are shifted right, so diagonal neighbors sit at c and c+1 (odd) or c-1 and c (even).
        const int shift = (r % 2 == 1) ? 0 : -1;
        const int dr[] = {0, 0, -1, -1, 1, 1};
        const int dc[] = {-1, 1, shift, shift + 1, shift, shift + 1};
        std::vector<std::size_t> out;
        for (int k = 0; k < 6; ++k)
        {
            const int rr = r + dr[k], cc = c + dc[k];
            if (rr >= 0 && rr < rows && cc >= 0 && cc < cols)
                out.push_back(static_cast<std::size_t>(rr * cols + cc));
        }
        return out;
    }

    BeamGrid build_beam_grid(int rows, int cols, double theta_3db_deg, double g_max_db)
    {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("build_beam_grid: rows and cols must be >= 1");
        if (!(theta_3db_deg > 0.0) || !std::isfinite(theta_3db_deg))
            throw std::invalid_argument("build_beam_grid: theta_3db must be positive");
        if (!std::isfinite(g_max_db))
            throw std::invalid_argument("build_beam_grid: g_max_db must be finite");

        BeamGrid grid;
        grid.rows = rows;
        grid.cols = cols;
        grid.theta_3db_deg = theta_3db_deg;
        grid.g_max_db = g_max_db;

        const double d = grid.spacing_deg();
        const double row_pitch = d * std::sqrt(3.0) / 2.0;
        double sx = 0.0, sy = 0.0;
        grid.beam_centers.reserve(static_cast<std::size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
            {
                const AngularPoint p{(c + 0.5 * (r % 2)) * d, r * row_pitch};
                sx += p.x_deg;
                sy += p.y_deg;
                grid.beam_centers.push_back(p);
            }
        const double n = static_cast<double>(grid.beam_centers.size());
        for (auto &p : grid.beam_centers)
        {
            p.x_deg -= sx / n;
            p.y_deg -= sy / n;
        }
        return grid;
    }

    UserSet drop_users(const BeamGrid &grid, std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        UserSet users;
        users.positions.reserve(grid.size());
        users.home_beam.reserve(grid.size());
        for (std::size_t b = 0; b < grid.size(); ++b)
        {
            const double r = grid.theta_3db_deg * std::sqrt(unif(rng));
            const double phi = 2.0 * std::numbers::pi * unif(rng);
            const auto &c = grid.beam_centers[b];
            users.positions.push_back({c.x_deg + r * std::cos(phi), c.y_deg + r * std::sin(phi)});
            users.home_beam.push_back(b);
        }
        return users;
    }

    UserSet boresight_users(const BeamGrid &grid)
    {
        UserSet users;
        users.positions = grid.beam_centers;
        for (std::size_t b = 0; b < grid.size(); ++b)
            users.home_beam.push_back(b);
        return users;
    }

    double beam_pattern(double off_axis_deg, double theta_3db_deg)
    {
        const double u = pattern_u_scale * std::sin(std::abs(off_axis_deg) * deg2rad) / std::sin(theta_3db_deg * deg2rad);
        // analytic limit 1/4 + 3/4 at boresight
        if (u < 1e-12)
            return 1.0;
        const double a = mathkit::bessel_j(1, u) / (2.0 * u) + 36.0 * mathkit::bessel_j(3, u) / (u * u * u);
        return a * a;
    }

    GainMatrix beam_gain_matrix(const BeamGrid &grid, const UserSet &users, const GainOptions &opts)
    {
        const auto n_beams = static_cast<Eigen::Index>(grid.size());
        const auto n_users = static_cast<Eigen::Index>(users.size());
        const double peak = opts.normalize_peak ? 1.0 : grid.g_max_linear();
        const double floor = std::isfinite(opts.floor_db) ? std::pow(10.0, opts.floor_db / 10.0) : 0.0;

        GainMatrix b(n_beams, n_users);
        for (Eigen::Index j = 0; j < n_users; ++j)
            for (Eigen::Index i = 0; i < n_beams; ++i)
            {
                const double theta = angular_distance_deg(grid.beam_centers[i], users.positions[j]);
                const double g = std::max(beam_pattern(theta, grid.theta_3db_deg), floor);
                b(i, j) = std::sqrt(peak * g);
            }
        return b;
    }
}

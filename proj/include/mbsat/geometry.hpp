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

#ifndef MBSAT_GEOMETRY_HPP
#define MBSAT_GEOMETRY_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <random>
#include <vector>

namespace mbsat
{
    // Planar angular coordinate as seen from the satellite, in degrees.
    struct AngularPoint
    {
        double x_deg = 0.0;
        double y_deg = 0.0;
    };

    double angular_distance_deg(const AngularPoint &a, const AngularPoint &b);

    // Hexagonal multibeam lattice. Beam index = row * cols + col.
    struct BeamGrid
    {
        std::vector<AngularPoint> beam_centers;
        double theta_3db_deg = 0.4; // half-power half-angle
        int rows = 0;
        int cols = 0;
        double g_max_db = 52.0; // peak satellite antenna gain, dBi

        std::size_t size() const { return beam_centers.size(); }
        int row_of(std::size_t beam) const { return static_cast<int>(beam) / cols; }
        int col_of(std::size_t beam) const { return static_cast<int>(beam) % cols; }
        double spacing_deg() const;
        double g_max_linear() const;

        // Neighbors on the hexagonal lattice (6-connectivity with odd-row offset).
        std::vector<std::size_t> lattice_neighbors(std::size_t beam) const;
    };

    // One user per beam; home_beam[j] is the beam user j was dropped in.
    struct UserSet
    {
        std::vector<AngularPoint> positions;
        std::vector<std::size_t> home_beam;

        std::size_t size() const { return positions.size(); }
    };

    // b(i, j): amplitude gain from feed i toward user j.
    using GainMatrix = Eigen::MatrixXd;

    // Options of the gain computation that are not part of the grid itself.
    struct GainOptions
    {
        bool normalize_peak = false;  // unit peak instead of g_max (link-budget mode)
        double floor_db = -std::numeric_limits<double>::infinity(); // minimum power gain relative to peak, dB; -inf disables
    };

    // Rows x cols hexagonal lattice, odd rows offset by half a spacing, centroid at the origin.
    // Nearest-neighbor spacing is sqrt(3) * theta_3db.
    BeamGrid build_beam_grid(int rows, int cols, double theta_3db_deg, double g_max_db);

    // Users uniformly distributed over the disk of radius theta_3db around each beam center.
    UserSet drop_users(const BeamGrid &grid, std::mt19937_64 &rng);

    // Users placed exactly at their beam's boresight.
    UserSet boresight_users(const BeamGrid &grid);

    // Normalized pattern (J1(u)/(2u) + 36 J3(u)/u^3)^2 with u = 2.07123 sin(theta)/sin(theta_3db).
    // Equals 1 on boresight.
    double beam_pattern(double off_axis_deg, double theta_3db_deg);

    GainMatrix beam_gain_matrix(const BeamGrid &grid, const UserSet &users, const GainOptions &opts = {});
}

#endif

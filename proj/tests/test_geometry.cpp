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

#include <catch_amalgamated.hpp>

#include "mbsat/geometry.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace mbsat;

namespace
{
    // pattern from the extended-precision Bessel series
    double pattern_oracle(double u)
    {
        const long double a = oracle::bessel_series(1, u) / (2.0L * u) + 36.0L * oracle::bessel_series(3, u) / (u * u * u);
        return static_cast<double>(a * a);
    }
}

TEST_CASE("beam grid construction", "[geometry]")
{
    const auto grid = build_beam_grid(10, 10, 0.4, 52.0);
    REQUIRE(grid.size() == 100);
    CHECK_THAT(grid.spacing_deg(), WithinRel(0.69282032, 1e-8));
    CHECK_THAT(angular_distance_deg(grid.beam_centers[0], grid.beam_centers[1]), WithinRel(std::sqrt(3.0) * 0.4, 1e-12));

    double sx = 0.0, sy = 0.0;
    for (const auto &p : grid.beam_centers)
    {
        sx += p.x_deg;
        sy += p.y_deg;
    }
    CHECK_THAT(sx, WithinAbs(0.0, 1e-12));
    CHECK_THAT(sy, WithinAbs(0.0, 1e-12));

    // hexagonal close packing: every lattice neighbor at exactly one spacing, nothing closer
    for (std::size_t b = 0; b < grid.size(); ++b)
    {
        for (std::size_t n : grid.lattice_neighbors(b))
            CHECK_THAT(angular_distance_deg(grid.beam_centers[b], grid.beam_centers[n]), WithinRel(grid.spacing_deg(), 1e-12));
        for (std::size_t o = 0; o < grid.size(); ++o)
            if (o != b)
                CHECK(angular_distance_deg(grid.beam_centers[b], grid.beam_centers[o]) > grid.spacing_deg() * (1 - 1e-12));
    }
    CHECK(grid.lattice_neighbors(55).size() == 6);

    const auto single = build_beam_grid(1, 1, 0.7, 40.0);
    REQUIRE(single.size() == 1);
    CHECK(single.beam_centers[0].x_deg == 0.0);
    CHECK(single.beam_centers[0].y_deg == 0.0);

    CHECK_THROWS_AS(build_beam_grid(0, 10, 0.4, 52.0), std::invalid_argument);
    CHECK_THROWS_AS(build_beam_grid(10, -1, 0.4, 52.0), std::invalid_argument);
    CHECK_THROWS_AS(build_beam_grid(2, 2, 0.0, 52.0), std::invalid_argument);
}

TEST_CASE("user drop", "[geometry]")
{
    const auto grid = build_beam_grid(10, 10, 0.4, 52.0);
    std::mt19937_64 rng(7);
    const auto users = drop_users(grid, rng);
    REQUIRE(users.size() == grid.size());
    for (std::size_t j = 0; j < users.size(); ++j)
    {
        CHECK(users.home_beam[j] == j);
        CHECK(angular_distance_deg(users.positions[j], grid.beam_centers[j]) <= grid.theta_3db_deg);
    }

    std::mt19937_64 a(99), b(99);
    const auto ua = drop_users(grid, a), ub = drop_users(grid, b);
    for (std::size_t j = 0; j < ua.size(); ++j)
    {
        CHECK(ua.positions[j].x_deg == ub.positions[j].x_deg);
        CHECK(ua.positions[j].y_deg == ub.positions[j].y_deg);
    }
}

TEST_CASE("uniform disk mean radius is 2/3 of the radius", "[geometry]")
{
    // E[r] = int_0^R r (2r/R^2) dr = 2R/3
    const auto grid = build_beam_grid(1, 1, 0.4, 52.0);
    std::mt19937_64 rng(2024);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        sum += angular_distance_deg(drop_users(grid, rng).positions[0], grid.beam_centers[0]);
    CHECK_THAT(sum / n, WithinRel(2.0 / 3.0 * 0.4, 0.01));
}

TEST_CASE("beam pattern", "[geometry]")
{
    CHECK(beam_pattern(0.0, 0.4) == 1.0);
    CHECK_THAT(beam_pattern(1e-9, 0.4), WithinRel(1.0, 1e-12));

    // 3 dB contour sits at theta_3db
    const double u3 = 2.07123 * std::sin(0.4 * std::numbers::pi / 180) / std::sin(0.4 * std::numbers::pi / 180);
    CHECK_THAT(pattern_oracle(u3), WithinRel(0.5, 0.005));
    CHECK_THAT(beam_pattern(0.4, 0.4), WithinRel(0.5, 0.005));
    CHECK_THAT(beam_pattern(0.4, 0.4), WithinRel(pattern_oracle(u3), 1e-10));

    for (double theta = 0.01; theta < 1.5; theta += 0.013)
    {
        const double u = 2.07123 * std::sin(theta * std::numbers::pi / 180) / std::sin(0.4 * std::numbers::pi / 180);
        CHECK_THAT(beam_pattern(theta, 0.4), WithinAbs(pattern_oracle(u), 1e-12));
    }

    // main lobe is monotone out to the first null
    double prev = 1.0;
    for (double theta = 0.01; theta < 0.8; theta += 0.01)
    {
        const double g = beam_pattern(theta, 0.4);
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("small-angle consistency of the pattern argument", "[geometry]")
{
    // u with exact sines vs the planar ratio theta/theta_3db
    const double th3 = 0.4 * std::numbers::pi / 180;
    for (double deg = 0.05; deg < 1.35; deg += 0.05)
    {
        const double t = deg * std::numbers::pi / 180;
        const double exact = std::sin(t) / std::sin(th3);
        const double planar = t / th3;
        CHECK(std::abs(exact / planar - 1.0) < 1e-4);
    }
}

TEST_CASE("gain matrix", "[geometry]")
{
    const auto grid = build_beam_grid(10, 10, 0.4, 52.0);
    const double gmax = std::pow(10.0, 5.2);

    SECTION("boresight users")
    {
        const auto b = beam_gain_matrix(grid, boresight_users(grid));
        REQUIRE(b.rows() == 100);
        REQUIRE(b.cols() == 100);
        for (Eigen::Index j = 0; j < 100; ++j)
        {
            CHECK_THAT(b(j, j) * b(j, j), WithinRel(gmax, 1e-12));
            for (Eigen::Index i = 0; i < 100; ++i)
                if (i != j)
                    CHECK(b(j, j) > b(i, j));
        }
    }

    SECTION("random users: bounded, nonnegative, finite")
    {
        std::mt19937_64 rng(5);
        const auto users = drop_users(grid, rng);
        const auto b = beam_gain_matrix(grid, users);
        CHECK(b.allFinite());
        CHECK(b.minCoeff() >= 0.0);
        CHECK(b.maxCoeff() <= std::sqrt(gmax) * (1 + 1e-12));

        // swapping two users swaps the matching columns
        auto swapped = users;
        std::swap(swapped.positions[3], swapped.positions[40]);
        const auto bs = beam_gain_matrix(grid, swapped);
        CHECK((bs.col(3) - b.col(40)).cwiseAbs().maxCoeff() == 0.0);
        CHECK((bs.col(40) - b.col(3)).cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("normalized peak and gain floor")
    {
        std::mt19937_64 rng(5);
        const auto users = drop_users(grid, rng);
        const auto b = beam_gain_matrix(grid, users);
        const auto bn = beam_gain_matrix(grid, users, {.normalize_peak = true});
        CHECK(((b / std::sqrt(gmax)) - bn).cwiseAbs().maxCoeff() < 1e-12);

        const auto bf = beam_gain_matrix(grid, users, {.normalize_peak = true, .floor_db = -30.0});
        CHECK(bf.minCoeff() >= std::sqrt(1e-3) * (1 - 1e-12));
    }
}

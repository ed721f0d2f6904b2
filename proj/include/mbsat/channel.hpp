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

#ifndef MBSAT_CHANNEL_HPP
#define MBSAT_CHANNEL_HPP

#include "mbsat/coloring.hpp"
#include "mbsat/geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <ostream>
#include <random>
#include <span>
#include <vector>

namespace mbsat
{
    // Composite Rician / lognormal fading parameters.
    // mu_m and sigma_m are the mean and standard deviation of ln(xi), xi a power gain.
    struct FadingParams
    {
        double k_factor_db = 13.0;
        double mu_m = -2.62;
        double sigma_m = 1.6;

        double k_linear() const;
        void validate() const;
    };

    // Per-user fading, shared by every feed (collocated satellite antennas).
    struct FadingDraw
    {
        Eigen::VectorXcd h;
        Eigen::VectorXd xi;
    };

    // z(i, j) = b(i, j) * h(j) * sqrt(xi(j))
    struct ChannelRealization
    {
        Eigen::MatrixXcd z;
        GainMatrix b;
        Eigen::VectorXcd h;
        Eigen::VectorXd xi;
    };

    // h = sqrt(K/(K+1)) + sqrt(1/(K+1)) w, w ~ CN(0, 1). E|h|^2 = 1, LOS phase 0.
    std::complex<double> sample_rician(const FadingParams &params, std::mt19937_64 &rng);

    // xi = exp(mu_m + sigma_m g), g ~ N(0, 1)
    double sample_shadowing(const FadingParams &params, std::mt19937_64 &rng);

    // n Rician draws followed by n shadowing draws.
    FadingDraw sample_fading(std::size_t n_users, const FadingParams &params, std::mt19937_64 &rng);

    ChannelRealization assemble_channel(const GainMatrix &b, const Eigen::VectorXcd &h, const Eigen::VectorXd &xi);

    // Rows (feeds) and columns (users) of b restricted to the given beams.
    GainMatrix restrict_gain(const GainMatrix &b, std::span<const std::size_t> beams);

    // Restriction of a full-system realization to one cluster. Fading is reused, not resampled.
    ChannelRealization restrict_channel(const ChannelRealization &full, std::span<const std::size_t> beams);

    // n x n channel of one color's cluster with freshly sampled per-user fading.
    ChannelRealization cluster_channel(const BeamGrid &grid, const UserSet &users, const ColorPlan &plan, int color,
                                       const FadingParams &params, std::mt19937_64 &rng, const GainOptions &opts = {});

    // Debug dump: one line per feed, real/imag interleaved per user.
    void write_realization_csv(std::ostream &os, const ChannelRealization &r);
}

#endif

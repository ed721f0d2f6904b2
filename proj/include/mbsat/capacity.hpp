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

#ifndef MBSAT_CAPACITY_HPP
#define MBSAT_CAPACITY_HPP

#include "mbsat/channel.hpp"
#include "mbsat/coloring.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mbsat
{
    // Transmit SNR: per-user transmit power over per-feed noise power.
    struct SnrPoint
    {
        double gamma_db = 0.0;
        double gamma_lin = 1.0;

        static SnrPoint from_db(double db);
    };

    enum class SystemTag
    {
        full_mud,        // full reuse, joint decoding of all N users
        clustered_s1,    // per-color joint decoding, conventional color layout
        clustered_s2,    // per-color joint decoding, adjacent co-channel beams
        conventional,    // single-user decoding, 4-color reuse
        lb_full,         // analytic lower bound for full_mud
        lb_clustered_s1, // analytic lower bound for clustered_s1
        lb_clustered_s2, // analytic lower bound for clustered_s2
        asymptote        // high-SNR affine asymptote of full_mud
    };

    std::string_view to_string(SystemTag tag);
    std::optional<SystemTag> parse_system_tag(std::string_view name);

    // Spectral efficiency in bit/s/Hz.
    struct SpectralEfficiency
    {
        double value = 0.0;
        SystemTag system = SystemTag::full_mud;
        bool degenerate = false; // set by the bounds when B B^H is singular
    };

    // log2 det(I + gamma * gram) for Hermitian positive semidefinite gram, by Cholesky.
    double log2det_identity_plus(const Eigen::MatrixXcd &gram, double gamma_lin);

    // log2 det(I_n + gamma Z^H Z)
    SpectralEfficiency logdet_capacity(const Eigen::MatrixXcd &z, SnrPoint gamma);
    SpectralEfficiency logdet_capacity(const ChannelRealization &r, SnrPoint gamma);

    // Sum of per-cluster log-det capacities. Colors are orthogonal, so there is no inter-cluster term.
    SpectralEfficiency clustered_capacity(std::span<const ChannelRealization> clusters, SnrPoint gamma);
    SpectralEfficiency clustered_capacity(const ColorPlan &plan, std::span<const ChannelRealization> clusters, SnrPoint gamma);

    // Single-beam decoding with co-channel interference:
    //   sum_i N_c^-1 log2(1 + |z_ii|^2 / (sum_{j in A_C^i} |z_ij|^2 + (N_c gamma)^-1))
    // summed over all beams of all colors.
    SpectralEfficiency conventional_se(const ColorPlan &plan, const Eigen::MatrixXcd &z_full, SnrPoint gamma);
    SpectralEfficiency conventional_se(const ColorPlan &plan, const ChannelRealization &z_full, SnrPoint gamma);

    // ln det(B B^H), empty when B B^H is singular or not square-compatible.
    std::optional<double> log_det_gram(const GainMatrix &b);

    // mu_m - ln(K_r + 1) + g1(K_r), the mean log power of the composite fading coefficient.
    double fading_log_offset(const FadingParams &params);

    // m log2(1 + gamma exp(ln_det / m + offset))
    double lower_bound_value(double ln_det, Eigen::Index m, double offset, double gamma_lin);

    // Closed-form lower bound on E[log2 det(I + gamma Z^H Z)] for Z = B H Xi^{1/2}.
    SpectralEfficiency ergodic_lb(const GainMatrix &b, const FadingParams &params, SnrPoint gamma);

    // Sum of ergodic_lb over each color's n x n gain block.
    SpectralEfficiency clustered_lb(const ColorPlan &plan, const GainMatrix &b_full, const FadingParams &params,
                                    SnrPoint gamma);

    // m log2(gamma) + (ln det(B B^H) + m offset) / ln 2. Throws std::domain_error if B B^H is singular.
    SpectralEfficiency high_snr_asymptote(const GainMatrix &b, const FadingParams &params, SnrPoint gamma);
}

#endif

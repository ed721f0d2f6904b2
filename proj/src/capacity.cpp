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

#include "mbsat/capacity.hpp"
#include "mbsat/mathkit.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbsat
{
    namespace
    {
        constexpr std::array<std::pair<SystemTag, std::string_view>, 8> tag_names{{
            {SystemTag::full_mud, "full_mud"},
            {SystemTag::clustered_s1, "clustered_s1"},
            {SystemTag::clustered_s2, "clustered_s2"},
            {SystemTag::conventional, "conventional"},
            {SystemTag::lb_full, "lb_full"},
            {SystemTag::lb_clustered_s1, "lb_clustered_s1"},
            {SystemTag::lb_clustered_s2, "lb_clustered_s2"},
            {SystemTag::asymptote, "asymptote"},
        }};

        void require_finite(const Eigen::MatrixXcd &z, const char *who)
        {
            if (!z.allFinite())
                throw std::invalid_argument(std::string(who) + ": channel matrix has non-finite entries");
        }
    }

    SnrPoint SnrPoint::from_db(double db)
    {
        if (!std::isfinite(db))
            throw std::invalid_argument("SnrPoint: gamma_db must be finite");
        return {db, std::pow(10.0, db / 10.0)};
    }

    std::string_view to_string(SystemTag tag)
    {
        for (const auto &[t, name] : tag_names)
            if (t == tag)
                return name;
        return "unknown";
    }

    std::optional<SystemTag> parse_system_tag(std::string_view name)
    {
        for (const auto &[t, n] : tag_names)
            if (n == name)
                return t;
        return std::nullopt;
    }

    double log2det_identity_plus(const Eigen::MatrixXcd &gram, double gamma_lin)
    {
        const Eigen::Index n = gram.rows();
        Eigen::MatrixXcd a = gamma_lin * gram;
        a.diagonal().array() += 1.0;
        Eigen::LLT<Eigen::MatrixXcd> llt(a);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("log2det_identity_plus: Cholesky factorization failed");
        double ln_det = 0.0;
        const auto &l = llt.matrixLLT();
        for (Eigen::Index i = 0; i < n; ++i)
            ln_det += std::log(l(i, i).real());
        return 2.0 * ln_det / std::numbers::ln2;
    }

    SpectralEfficiency logdet_capacity(const Eigen::MatrixXcd &z, SnrPoint gamma)
    {
        require_finite(z, "logdet_capacity");
        if (z.rows() < z.cols())
            throw std::invalid_argument("logdet_capacity: channel must be square or tall");
        const Eigen::MatrixXcd gram = z.adjoint() * z;
        return {log2det_identity_plus(gram, gamma.gamma_lin), SystemTag::full_mud};
    }

    SpectralEfficiency logdet_capacity(const ChannelRealization &r, SnrPoint gamma)
    {
        return logdet_capacity(r.z, gamma);
    }

    SpectralEfficiency clustered_capacity(std::span<const ChannelRealization> clusters, SnrPoint gamma)
    {
        if (clusters.empty())
            throw std::invalid_argument("clustered_capacity: no clusters");
        const Eigen::Index n = clusters.front().z.cols();
        double total = 0.0;
        for (const auto &c : clusters)
        {
            if (c.z.rows() != n || c.z.cols() != n)
                throw std::invalid_argument("clustered_capacity: all clusters must be n x n with the same n");
            total += logdet_capacity(c.z, gamma).value;
        }
        return {total, SystemTag::clustered_s1};
    }

    SpectralEfficiency clustered_capacity(const ColorPlan &plan, std::span<const ChannelRealization> clusters,
                                          SnrPoint gamma)
    {
        if (clusters.size() != static_cast<std::size_t>(plan.n_colors))
            throw std::invalid_argument("clustered_capacity: expected " + std::to_string(plan.n_colors) +
                                        " clusters, got " + std::to_string(clusters.size()));
        if (clusters.front().z.cols() != static_cast<Eigen::Index>(plan.cluster_size))
            throw std::invalid_argument("clustered_capacity: cluster dimension does not match the plan");
        return clustered_capacity(clusters, gamma);
    }

    SpectralEfficiency conventional_se(const ColorPlan &plan, const Eigen::MatrixXcd &z_full, SnrPoint gamma)
    {
        require_finite(z_full, "conventional_se");
        const auto n = static_cast<Eigen::Index>(plan.n_beams());
        if (z_full.rows() != n || z_full.cols() != n)
            throw std::invalid_argument("conventional_se: channel must be N x N for the plan's N beams");

        const double n_c = plan.n_colors;
        const double noise = 1.0 / (n_c * gamma.gamma_lin);
        double total = 0.0;
        for (const auto &cluster : plan.clusters)
            for (std::size_t i : cluster)
            {
                const auto ii = static_cast<Eigen::Index>(i);
                double interference = 0.0;
                for (std::size_t j : cluster)
                    if (j != i)
                        interference += std::norm(z_full(ii, static_cast<Eigen::Index>(j)));
                total += std::log2(1.0 + std::norm(z_full(ii, ii)) / (interference + noise)) / n_c;
            }
        return {total, SystemTag::conventional};
    }

    SpectralEfficiency conventional_se(const ColorPlan &plan, const ChannelRealization &z_full, SnrPoint gamma)
    {
        return conventional_se(plan, z_full.z, gamma);
    }

    std::optional<double> log_det_gram(const GainMatrix &b)
    {
        if (b.rows() == 0 || !b.allFinite())
            return std::nullopt;
        const Eigen::MatrixXd gram = b * b.transpose();
        Eigen::LLT<Eigen::MatrixXd> llt(gram);
        if (llt.info() != Eigen::Success)
            return std::nullopt;
        // pivots at rounding level of the largest diagonal entry mean numerically singular
        const double tol = static_cast<double>(gram.rows()) * std::numeric_limits<double>::epsilon() * gram.diagonal().maxCoeff();
        double ln_det = 0.0;
        for (Eigen::Index i = 0; i < gram.rows(); ++i)
        {
            const double d = llt.matrixLLT()(i, i);
            if (!(d * d > tol))
                return std::nullopt;
            ln_det += std::log(d);
        }
        return 2.0 * ln_det;
    }

    double fading_log_offset(const FadingParams &params)
    {
        const double k = params.k_linear();
        if (std::isinf(k))
            return params.mu_m; // g1(K) - ln(K + 1) -> 0
        return params.mu_m - std::log(k + 1.0) + mathkit::g1(k);
    }

    double lower_bound_value(double ln_det, Eigen::Index m, double offset, double gamma_lin)
    {
        const double md = static_cast<double>(m);
        return md * std::log2(1.0 + gamma_lin * std::exp(ln_det / md + offset));
    }

    SpectralEfficiency ergodic_lb(const GainMatrix &b, const FadingParams &params, SnrPoint gamma)
    {
        if (b.rows() != b.cols())
            throw std::invalid_argument("ergodic_lb: gain block must be square");
        const auto ln_det = log_det_gram(b);
        if (!ln_det)
            return {0.0, SystemTag::lb_full, true};
        return {lower_bound_value(*ln_det, b.rows(), fading_log_offset(params), gamma.gamma_lin), SystemTag::lb_full};
    }

    SpectralEfficiency clustered_lb(const ColorPlan &plan, const GainMatrix &b_full, const FadingParams &params,
                                    SnrPoint gamma)
    {
        if (b_full.rows() != static_cast<Eigen::Index>(plan.n_beams()) || b_full.cols() != b_full.rows())
            throw std::invalid_argument("clustered_lb: gain matrix must be N x N for the plan's N beams");
        SpectralEfficiency out{0.0, SystemTag::lb_clustered_s1};
        for (const auto &cluster : plan.clusters)
        {
            const auto term = ergodic_lb(restrict_gain(b_full, cluster), params, gamma);
            out.value += term.value;
            out.degenerate = out.degenerate || term.degenerate;
        }
        return out;
    }

    SpectralEfficiency high_snr_asymptote(const GainMatrix &b, const FadingParams &params, SnrPoint gamma)
    {
        if (b.rows() != b.cols())
            throw std::invalid_argument("high_snr_asymptote: gain block must be square");
        const auto ln_det = log_det_gram(b);
        if (!ln_det)
            throw std::domain_error("high_snr_asymptote: B B^H is singular, asymptote undefined");
        const double m = static_cast<double>(b.rows());
        const double value = m * std::log2(gamma.gamma_lin) + (*ln_det + m * fading_log_offset(params)) / std::numbers::ln2;
        return {value, SystemTag::asymptote};
    }
}

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

#include "mbsat/mathkit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mbsat::mathkit
{
    namespace
    {
        constexpr double eps = std::numeric_limits<double>::epsilon();

        // Ascending series gamma + ln|x| + sum x^k / (k k!). Used where it does not cancel badly.
        double ei_series(double x)
        {
            double term = 1.0, sum = 0.0;
            for (int k = 1; k < 500; ++k)
            {
                term *= x / k;
                const double add = term / k;
                sum += add;
                if (std::abs(add) < eps * std::abs(sum))
                    break;
            }
            return euler_gamma + std::log(std::abs(x)) + sum;
        }

        // E1(x) for x > 1 by the modified Lentz continued fraction.
        double e1_continued_fraction(double x)
        {
            constexpr double tiny = 1e-300;
            double b = x + 1.0;
            double c = 1.0 / tiny;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i < 1000; ++i)
            {
                const double a = -static_cast<double>(i) * i;
                b += 2.0;
                d = 1.0 / (a * d + b);
                c = b + a / c;
                const double del = c * d;
                h *= del;
                if (std::abs(del - 1.0) < eps)
                    break;
            }
            return h * std::exp(-x);
        }

        // Ei(x) ~ e^x/x * sum k!/x^k, truncated at the smallest term.
        double ei_asymptotic(double x)
        {
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 100; ++k)
            {
                const double next = term * k / x;
                if (next > term)
                    break;
                term = next;
                sum += term;
                if (term < eps * sum)
                    break;
            }
            return std::exp(x) * sum / x;
        }

        // Power series sum (-1)^k / (k! (k+nu)!) (x/2)^{2k+nu}
        double bessel_series(int nu, double x)
        {
            const double half = 0.5 * x;
            double term = 1.0;
            for (int i = 1; i <= nu; ++i)
                term *= half / i;
            double sum = term;
            const double q = -half * half;
            for (int k = 1; k < 300; ++k)
            {
                term *= q / (static_cast<double>(k) * (k + nu));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return sum;
        }

        // Hankel asymptotic expansion, J_nu(x) = sqrt(2/(pi x)) (P cos w - Q sin w)
        double bessel_asymptotic(int nu, double x)
        {
            const double mu = 4.0 * nu * nu;
            const double z8 = 8.0 * x;
            double p = 1.0, q = 0.0;
            double term = 1.0;
            double last = std::numeric_limits<double>::infinity();
            for (int k = 1; k < 60; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                term *= (mu - odd * odd) / (k * z8);
                if (std::abs(term) > last)
                    break;
                last = std::abs(term);
                if (k % 2 == 1)
                    q += (k % 4 == 1 ? term : -term);
                else
                    p += (k % 4 == 2 ? -term : term);
                if (last < 1e-17)
                    break;
            }
            const double w = x - (0.5 * nu + 0.25) * std::numbers::pi;
            return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(w) - q * std::sin(w));
        }
    }

    double exp_integral_ei(double x)
    {
        if (std::isnan(x))
            throw std::domain_error("exp_integral_ei: NaN argument");
        if (x == 0.0)
            throw std::domain_error("exp_integral_ei: logarithmic singularity at x = 0");

        if (x < 0.0)
            return x >= -1.0 ? ei_series(x) : -e1_continued_fraction(-x);
        if (x <= 40.0)
            return ei_series(x);
        return ei_asymptotic(x);
    }

    double g1(double s2)
    {
        if (!(s2 > 0.0))
            throw std::domain_error("g1: argument must be positive");
        return std::log(s2) - exp_integral_ei(-s2);
    }

    double bessel_j(int order, double x)
    {
        if (order != 1 && order != 3)
            throw std::invalid_argument("bessel_j: only orders 1 and 3 are supported");
        if (!std::isfinite(x))
            throw std::domain_error("bessel_j: argument must be finite");
        if (x < 0.0)
            return -bessel_j(order, -x); // odd orders
        if (x < 12.0)
            return bessel_series(order, x);
        return bessel_asymptotic(order, x);
    }
}

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

#ifndef MBSAT_TESTS_ORACLES_HPP
#define MBSAT_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle
{
    // Ei(x) = gamma + ln|x| + sum x^k/(k k!) in extended precision.
    inline long double ei_series(long double x)
    {
        const long double euler = 0.577215664901532860606512090082402431L;
        long double term = 1.0L, sum = 0.0L;
        for (int k = 1; k < 2000; ++k)
        {
            term *= x / k;
            sum += term / k;
            if (std::fabs(term / k) < 1e-22L * std::fabs(sum))
                break;
        }
        return euler + std::log(std::fabs(x)) + sum;
    }

    // sum (-1)^k / (k! (k+nu)!) (x/2)^{2k+nu} in extended precision
    inline long double bessel_series(int nu, long double x)
    {
        long double term = 1.0L;
        for (int i = 1; i <= nu; ++i)
            term *= (x / 2.0L) / i;
        long double sum = term;
        for (int k = 1; k < 500; ++k)
        {
            term *= -(x / 2.0L) * (x / 2.0L) / (static_cast<long double>(k) * (k + nu));
            sum += term;
            if (std::fabs(term) < 1e-24L)
                break;
        }
        return sum;
    }

    // Determinant by cofactor expansion along the first row.
    inline std::complex<double> det_cofactor(const std::vector<std::vector<std::complex<double>>> &a)
    {
        const std::size_t n = a.size();
        if (n == 1)
            return a[0][0];
        std::complex<double> det = 0.0;
        for (std::size_t c = 0; c < n; ++c)
        {
            std::vector<std::vector<std::complex<double>>> minor;
            for (std::size_t r = 1; r < n; ++r)
            {
                std::vector<std::complex<double>> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c)
                        row.push_back(a[r][k]);
                minor.push_back(row);
            }
            det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * det_cofactor(minor);
        }
        return det;
    }
}

#endif

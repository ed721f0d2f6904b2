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

#ifndef MBSAT_MATHKIT_HPP
#define MBSAT_MATHKIT_HPP

// Special functions used by the capacity bounds and the beam pattern.
// All functions are pure and reentrant.

namespace mbsat::mathkit
{
    // Euler-Mascheroni constant
    inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

    // Exponential integral Ei(x) = -PV int_{-x}^{inf} e^{-t}/t dt.
    // Throws std::domain_error for x == 0 or NaN.
    double exp_integral_ei(double x);

    // g1(s2) = ln(s2) - Ei(-s2). Equals E[ln|X|^2] for X ~ CN(s, 1), |s|^2 = s2.
    // Throws std::domain_error for s2 <= 0.
    double g1(double s2);

    // Bessel function of the first kind J_order(x), order in {1, 3}.
    // Negative x is accepted through the odd symmetry of both orders.
    double bessel_j(int order, double x);
}

#endif

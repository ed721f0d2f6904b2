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

#ifndef MBSAT_LINKBUDGET_HPP
#define MBSAT_LINKBUDGET_HPP

#include "mbsat/capacity.hpp"

namespace mbsat
{
    // Return-link budget of an S-band GEO mobile system. Defaults are the reference MSS values.
    struct LinkBudget
    {
        double tx_power_dbw = 4.5;
        double tx_antenna_gain_db = 3.0;
        double max_sat_gain_dbi = 52.0;
        double free_space_loss_db = 190.0;
        double atmospheric_loss_db = 0.5;
        double fading_margin_db = 3.0;
        double noise_power_dbw = -133.0;
        double user_bandwidth_hz = 15e6;

        void validate() const;
    };

    // gamma_dB = P_tx + G_tx - FSL - L_atm - M_fade - N (+ G_sat,max when include_sat_gain).
    // Include the satellite gain only when B is normalized to unit peak.
    SnrPoint transmit_snr(const LinkBudget &budget, bool include_sat_gain);

    // bits/s = se * user bandwidth
    double throughput(const SpectralEfficiency &se, const LinkBudget &budget);
    double throughput(double se_bps_hz, const LinkBudget &budget);
}

#endif

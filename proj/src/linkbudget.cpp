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

#include "mbsat/linkbudget.hpp"

#include <cmath>
#include <stdexcept>

namespace mbsat
{
    void LinkBudget::validate() const
    {
        if (free_space_loss_db < 0.0 || atmospheric_loss_db < 0.0 || fading_margin_db < 0.0)
            throw std::invalid_argument("LinkBudget: losses and margins must be >= 0");
        if (!(user_bandwidth_hz > 0.0))
            throw std::invalid_argument("LinkBudget: user bandwidth must be > 0");
    }

    SnrPoint transmit_snr(const LinkBudget &budget, bool include_sat_gain)
    {
        double db = budget.tx_power_dbw + budget.tx_antenna_gain_db - budget.free_space_loss_db -
                    budget.atmospheric_loss_db - budget.fading_margin_db - budget.noise_power_dbw;
        if (include_sat_gain)
            db += budget.max_sat_gain_dbi;
        return SnrPoint::from_db(db);
    }

    double throughput(double se_bps_hz, const LinkBudget &budget)
    {
        return se_bps_hz * budget.user_bandwidth_hz;
    }

    double throughput(const SpectralEfficiency &se, const LinkBudget &budget)
    {
        return throughput(se.value, budget);
    }
}

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

#include "mbsat/coloring.hpp"

#include <stdexcept>
#include <string>

namespace mbsat
{
    namespace
    {
        void require_even(const BeamGrid &grid, const char *who)
        {
            if (grid.rows % 2 != 0 || grid.cols % 2 != 0)
                throw std::invalid_argument(std::string(who) + ": 4-color plans need even rows and cols, got " +
                                            std::to_string(grid.rows) + "x" + std::to_string(grid.cols));
        }
    }

    ColorPlan make_color_plan(std::vector<int> color_of, int n_colors)
    {
        if (n_colors < 1)
            throw std::invalid_argument("make_color_plan: n_colors must be >= 1");
        ColorPlan plan;
        plan.n_colors = n_colors;
        plan.clusters.resize(static_cast<std::size_t>(n_colors));
        for (std::size_t b = 0; b < color_of.size(); ++b)
        {
            const int c = color_of[b];
            if (c < 0 || c >= n_colors)
                throw std::invalid_argument("make_color_plan: color index out of range at beam " + std::to_string(b));
            plan.clusters[static_cast<std::size_t>(c)].push_back(b);
        }
        plan.cluster_size = plan.clusters.front().size();
        for (const auto &cl : plan.clusters)
            if (cl.size() != plan.cluster_size || cl.empty())
                throw std::invalid_argument("make_color_plan: color classes must be non-empty and of equal size");
        plan.color_of = std::move(color_of);
        return plan;
    }

    ColorPlan color_scenario1(const BeamGrid &grid)
    {
        require_even(grid, "color_scenario1");
        std::vector<int> color(grid.size());
        for (std::size_t b = 0; b < grid.size(); ++b)
            color[b] = 2 * (grid.row_of(b) % 2) + (grid.col_of(b) % 2);
        return make_color_plan(std::move(color), 4);
    }

    ColorPlan color_scenario2(const BeamGrid &grid)
    {
        require_even(grid, "color_scenario2");
        std::vector<int> color(grid.size());
        for (std::size_t b = 0; b < grid.size(); ++b)
            color[b] = 2 * (grid.row_of(b) >= grid.rows / 2 ? 1 : 0) + (grid.col_of(b) >= grid.cols / 2 ? 1 : 0);
        return make_color_plan(std::move(color), 4);
    }

    ColorPlan full_reuse_plan(std::size_t n_beams)
    {
        return make_color_plan(std::vector<int>(n_beams, 0), 1);
    }

    std::vector<std::size_t> cochannel_set(const ColorPlan &plan, std::size_t beam)
    {
        if (beam >= plan.n_beams())
            throw std::out_of_range("cochannel_set: beam index " + std::to_string(beam) + " out of range");
        std::vector<std::size_t> out;
        for (std::size_t j : plan.clusters[static_cast<std::size_t>(plan.color_of[beam])])
            if (j != beam)
                out.push_back(j);
        return out;
    }
}

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

#ifndef MBSAT_COLORING_HPP
#define MBSAT_COLORING_HPP

#include "mbsat/geometry.hpp"

#include <cstddef>
#include <vector>

namespace mbsat
{
    // Assignment of orthogonal resources (frequency segment x polarization) to beams.
    // Colors are treated as perfectly orthogonal.
    struct ColorPlan
    {
        std::vector<int> color_of;                      // beam -> color in [0, n_colors)
        std::vector<std::vector<std::size_t>> clusters; // color -> member beams, ascending
        int n_colors = 0;
        std::size_t cluster_size = 0;

        std::size_t n_beams() const { return color_of.size(); }
    };

    // Conventional 4-color reuse: color = 2 (row mod 2) + (col mod 2).
    // Requires even rows and cols.
    ColorPlan color_scenario1(const BeamGrid &grid);

    // Adjacent co-channel beams: the four lattice quadrants form the four colors.
    ColorPlan color_scenario2(const BeamGrid &grid);

    // Build a plan from an explicit beam->color map. Class sizes must be equal.
    ColorPlan make_color_plan(std::vector<int> color_of, int n_colors);

    // Every beam in one cluster (full frequency reuse).
    ColorPlan full_reuse_plan(std::size_t n_beams);

    // Beams sharing the color of `beam`, excluding `beam` itself.
    std::vector<std::size_t> cochannel_set(const ColorPlan &plan, std::size_t beam);
}

#endif

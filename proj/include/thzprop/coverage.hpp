// SPDX-License-Identifier: Apache-2.0
//
// thzprop - sub-THz urban microcell propagation models and link budget tools
// Copyright (C) 2026 thzprop contributors
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

#ifndef THZPROP_COVERAGE_HPP
#define THZPROP_COVERAGE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thzprop/linkbudget.hpp"
#include "thzprop/pathloss.hpp"

// Monte Carlo and closed-form coverage/outage analysis over the CI model
// with Gaussian shadow fading. A link is in outage when its shadowed path
// loss exceeds the budget's measurable maximum.

namespace thzprop
{

struct OutageQuery
{
    CiModelParams params; // sigma_db must be present
    LinkBudget budget;
    double distance_m = 1.0;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 0;
};

void validate(const OutageQuery &query);

struct OutageResult
{
    double outage_probability = 0.0;
    double analytic_probability = 0.0;
    std::uint64_t samples = 0;
    std::optional<double> max_range_m;
};

/// Standard Gaussian tail probability Q(x) = P(Z > x).
double gaussian_tail(double x);

/// Closed-form outage Q((max_pl - PL(d)) / sigma); a step function when
/// sigma = 0 (the boundary itself counts as detectable).
double analytic_outage_probability(const CiModelParams &params, const LinkBudget &budget,
                                   double distance_m);

/// Seeded Monte Carlo outage estimate plus the analytic value. Sample draws
/// are counter-based on (seed, index), so the result is bit-identical for
/// any worker count; the reduction is an integer outage count.
OutageResult outage_probability_mc(const OutageQuery &query, unsigned workers = 1);

/// Largest distance whose analytic outage stays at or below the target,
/// located by monotone bisection to 0.01 m. Entries without sigma are only
/// usable with target 0; a target of exactly 0 requires sigma = 0 (a
/// Gaussian tail never vanishes).
double max_range_m(const CiModelParams &params, const LinkBudget &budget, double outage_target);

struct BandComparison
{
    double freq_ghz = 0.0;
    double path_loss_db = 0.0;
    /// Absent when the registry entry carries no sigma.
    std::optional<double> outage_analytic;
};

struct BandComparisonRow
{
    double distance_m = 0.0;
    std::array<BandComparison, 3> bands; // 28, 73, 142 GHz
};

/// Side-by-side CI path loss and analytic outage across the three built-in
/// bands for the given scenario/mode/beam key.
std::vector<BandComparisonRow> compare_bands(Scenario scenario, AntennaMode mode,
                                             BeamSelection beam, const LinkBudget &budget,
                                             std::span<const double> distances);

} // namespace thzprop

#endif

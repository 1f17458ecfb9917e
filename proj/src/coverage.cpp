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

#include "thzprop/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "thzprop/errors.hpp"
#include "thzprop/random.hpp"

namespace thzprop
{

void validate(const OutageQuery &query)
{
    validate(query.params);
    validate(query.budget);
    if (!query.params.sigma_db)
        throw Error("outage query: registry entry has no published sigma; "
                    "shadow-fading sampling is rejected for it");
    if (!(query.distance_m >= 1.0))
        throw Error("outage query: distance_m must be >= 1 m");
    if (query.sample_count == 0)
        throw Error("outage query: sample_count must be positive");
}

double gaussian_tail(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double analytic_outage_probability(const CiModelParams &params, const LinkBudget &budget,
                                   double distance_m)
{
    const double pl = ci_path_loss_db(params, distance_m, 0.0);
    const double sigma = params.sigma_db.value_or(0.0);
    if (sigma == 0.0)
        return pl > budget.max_measurable_pl_db ? 1.0 : 0.0;
    return gaussian_tail((budget.max_measurable_pl_db - pl) / sigma);
}

OutageResult outage_probability_mc(const OutageQuery &query, unsigned workers)
{
    validate(query);
    if (workers == 0)
        workers = 1;

    const double pl = ci_path_loss_db(query.params, query.distance_m, 0.0);
    const double sigma = *query.params.sigma_db;
    const double max_pl = query.budget.max_measurable_pl_db;
    const std::uint64_t n = query.sample_count;
    const std::uint64_t seed = query.seed;

    // Each sample depends only on (seed, index); chunk boundaries cannot
    // change the outcome. The reduction is an integer count.
    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t outages = 0;
        for (std::uint64_t i = begin; i < end; ++i)
        {
            const double shadow = sigma * rng::normal_at(seed, i);
            if (pl + shadow > max_pl)
                ++outages;
        }
        return outages;
    };

    std::uint64_t outage_count = 0;
    if (workers == 1 || n < 2 * workers)
    {
        outage_count = count_range(0, n);
    }
    else
    {
        std::vector<std::uint64_t> counts(workers, 0);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::uint64_t chunk = n / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = (w + 1 == workers) ? n : begin + chunk;
            threads.emplace_back(
                [&, begin, end, w]() { counts[w] = count_range(begin, end); });
        }
        for (std::thread &t : threads)
            t.join();
        for (const std::uint64_t c : counts)
            outage_count += c;
    }

    OutageResult result;
    result.outage_probability = static_cast<double>(outage_count) / static_cast<double>(n);
    result.analytic_probability =
        analytic_outage_probability(query.params, query.budget, query.distance_m);
    result.samples = n;
    return result;
}

double max_range_m(const CiModelParams &params, const LinkBudget &budget, double outage_target)
{
    validate(params);
    validate(budget);
    if (outage_target < 0.0 || outage_target >= 1.0)
        throw Error("max_range_m: outage target must lie in [0, 1)");
    const double sigma = params.sigma_db.value_or(0.0);
    if (!params.sigma_db && outage_target > 0.0)
        throw Error("max_range_m: entry has no published sigma; only target 0 is defined");
    if (outage_target == 0.0 && sigma > 0.0)
        throw Error("max_range_m: a Gaussian tail never reaches exactly 0; "
                    "use a positive target");

    auto outage_at = [&](double d) {
        return analytic_outage_probability(params, budget, d);
    };

    if (outage_at(1.0) > outage_target)
        throw Error("max_range_m: outage target unreachable even at the 1 m reference");

    double lo = 1.0;
    double hi = 2.0;
    while (outage_at(hi) <= outage_target)
    {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12)
            throw Error("max_range_m: no finite range bound below 1e12 m");
    }
    while (hi - lo > 0.01)
    {
        const double mid = 0.5 * (lo + hi);
        if (outage_at(mid) <= outage_target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<BandComparisonRow> compare_bands(Scenario scenario, AntennaMode mode,
                                             BeamSelection beam, const LinkBudget &budget,
                                             std::span<const double> distances)
{
    validate(budget);
    constexpr std::array<double, 3> kBands = {28.0, 73.0, 142.0};

    std::vector<BandComparisonRow> rows;
    rows.reserve(distances.size());
    for (const double d : distances)
    {
        BandComparisonRow row;
        row.distance_m = d;
        for (std::size_t b = 0; b < kBands.size(); ++b)
        {
            const CiModelParams &params = registry_lookup(kBands[b], scenario, mode, beam);
            row.bands[b].freq_ghz = kBands[b];
            row.bands[b].path_loss_db = ci_path_loss_db(params, d, 0.0);
            if (params.sigma_db)
                row.bands[b].outage_analytic =
                    analytic_outage_probability(params, budget, d);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace thzprop

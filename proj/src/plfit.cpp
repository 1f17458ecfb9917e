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

#include "thzprop/plfit.hpp"

#include <cmath>
#include <vector>

#include "thzprop/errors.hpp"
#include "thzprop/pathloss.hpp"

namespace thzprop
{

namespace
{

void check_sample(const PathLossSample &s, std::size_t index)
{
    if (!std::isfinite(s.path_loss_db))
        throw Error("sample " + std::to_string(index + 1) + ": path_loss_db must be finite");
    if (!(s.distance_m >= 1.0))
        throw Error("sample " + std::to_string(index + 1) +
                    ": distance_m must be >= 1 m (CI reference distance)");
}

// Fixed-intercept least squares over the given subset. Accumulation order is
// the sample order, so the result is reproducible.
CiFitResult solve(std::span<const PathLossSample> samples, std::span<const std::size_t> used,
                  double freq_ghz)
{
    const double intercept = fspl_db(freq_ghz, 1.0);

    double sum_ab = 0.0;
    double sum_bb = 0.0;
    for (const std::size_t i : used)
    {
        const double a = samples[i].path_loss_db - intercept;
        const double b = 10.0 * std::log10(samples[i].distance_m);
        sum_ab += a * b;
        sum_bb += b * b;
    }
    if (sum_bb == 0.0)
        throw Error("degenerate fit: every sample sits at the 1 m reference distance");

    const double n = sum_ab / sum_bb;

    double sum_sq = 0.0;
    for (const std::size_t i : used)
    {
        const double a = samples[i].path_loss_db - intercept;
        const double b = 10.0 * std::log10(samples[i].distance_m);
        const double r = a - n * b;
        sum_sq += r * r;
    }

    CiFitResult result;
    result.ple_n = n;
    result.sigma_db = std::sqrt(sum_sq / static_cast<double>(used.size()));
    result.sample_count = used.size();
    return result;
}

} // namespace

CiFitResult fit_ci_mmse(std::span<const PathLossSample> samples, double freq_ghz)
{
    if (samples.empty())
        throw Error("fit_ci_mmse: no samples");

    std::vector<std::size_t> used;
    used.reserve(samples.size());
    std::size_t censored = 0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        check_sample(samples[i], i);
        if (samples[i].censored)
            ++censored;
        used.push_back(i);
    }

    CiFitResult result = solve(samples, used, freq_ghz);
    result.censored_count = censored;
    result.censoring_warning = censored > 0;
    return result;
}

CiFitResult fit_with_censoring_report(std::span<const PathLossSample> samples, double freq_ghz,
                                      double max_measurable_pl_db)
{
    if (samples.empty())
        throw Error("fit_with_censoring_report: no samples");
    if (!(max_measurable_pl_db > 0.0))
        throw Error("fit_with_censoring_report: max_measurable_pl_db must be positive");

    std::vector<std::size_t> used;
    used.reserve(samples.size());
    std::size_t censored = 0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        check_sample(samples[i], i);
        if (samples[i].censored || samples[i].path_loss_db >= max_measurable_pl_db)
            ++censored;
        else
            used.push_back(i);
    }
    if (used.empty())
        throw Error("fit_with_censoring_report: every sample is censored, nothing to fit");

    CiFitResult result = solve(samples, used, freq_ghz);
    result.censored_count = censored;
    result.censoring_warning = censored > 0;
    return result;
}

} // namespace thzprop

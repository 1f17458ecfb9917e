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

#ifndef THZPROP_PLFIT_HPP
#define THZPROP_PLFIT_HPP

#include <cstddef>
#include <span>

// MMSE fitting of the CI model's path loss exponent and shadow fading sigma
// from path loss scatter data, with dynamic-range censoring awareness.

namespace thzprop
{

/// One path loss measurement with antenna gains already removed.
struct PathLossSample
{
    double distance_m = 1.0;
    double path_loss_db = 0.0;
    /// True when the sample sits at/above the maximum measurable path loss.
    bool censored = false;
};

struct CiFitResult
{
    double ple_n = 0.0;
    double sigma_db = 0.0;
    /// Samples that entered the fit.
    std::size_t sample_count = 0;
    /// Censored samples seen (and, for the censoring-aware fit, excluded).
    std::size_t censored_count = 0;
    /// When true, the fitted PLE is a lower-biased estimate: links beyond
    /// the dynamic range never make it into the scatter.
    bool censoring_warning = false;
};

/// Least squares with the intercept pinned at FSPL(f, 1 m). With
/// A_i = PL_i - FSPL and B_i = 10 log10(d_i):
///   n = sum(A_i B_i) / sum(B_i^2),   sigma = sqrt(sum((A_i - n B_i)^2) / N).
/// sigma uses the population (1/N) normalization. All samples are fitted;
/// pre-marked censored samples only raise the warning flag.
CiFitResult fit_ci_mmse(std::span<const PathLossSample> samples, double freq_ghz);

/// Marks samples with path_loss_db >= max_measurable_pl_db as censored and
/// excludes them (and any pre-marked censored sample) from the fit.
CiFitResult fit_with_censoring_report(std::span<const PathLossSample> samples, double freq_ghz,
                                      double max_measurable_pl_db);

} // namespace thzprop

#endif

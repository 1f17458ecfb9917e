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

#ifndef THZPROP_PATHLOSS_HPP
#define THZPROP_PATHLOSS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "thzprop/channel_data.hpp"

// Free-space and close-in (CI, d0 = 1 m) path loss evaluation plus the
// built-in registry of fitted model parameters for the 28 / 73 / 142 GHz
// urban microcell bands.

namespace thzprop
{

enum class AntennaMode
{
    Directional,
    Omnidirectional
};

enum class BeamSelection
{
    Best,         // TX/RX pointing pair that maximizes received power
    Arbitrary,    // any measured pointing pair
    NotApplicable // LOS or omnidirectional entries carry no beam choice
};

std::string to_string(AntennaMode m);
std::string to_string(BeamSelection b);
AntennaMode antenna_mode_from_string(std::string_view text);
BeamSelection beam_selection_from_string(std::string_view text);

/// One row of the CI model registry: path loss exponent and shadow fading
/// standard deviation for a (band, scenario, antenna mode, beam) key.
/// sigma_db is absent where no value was ever published for the entry; such
/// entries reject shadow-fading sampling.
struct CiModelParams
{
    double freq_ghz = 142.0;
    double ple_n = 2.0;
    std::optional<double> sigma_db;
    Scenario scenario = Scenario::LOS;
    AntennaMode antenna_mode = AntennaMode::Directional;
    BeamSelection beam_selection = BeamSelection::NotApplicable;

    /// The fit behind this entry only saw links whose path loss fit inside
    /// the measurable dynamic range, so the PLE is a lower-biased estimate.
    /// Surfaced in reports.
    bool censored_fit = false;
};

void validate(const CiModelParams &params);

std::string registry_key_string(double freq_ghz, Scenario scenario, AntennaMode mode,
                                BeamSelection beam);

/// Free space path loss in dB: 32.4 + 20 log10(f_GHz) + 20 log10(d_m).
/// Both arguments must be positive.
double fspl_db(double freq_ghz, double distance_m);

/// CI path loss in dB: FSPL(f, 1 m) + 10 n log10(d) + shadow.
/// The model is anchored at d0 = 1 m; distance_m < 1 is a hard error.
double ci_path_loss_db(const CiModelParams &params, double distance_m, double shadow_db = 0.0);

/// All 14 built-in entries, ordered by band (142, 73, 28 GHz) and then
/// directional LOS, directional NLOS best/arbitrary, omni LOS, omni NLOS.
std::span<const CiModelParams> registry_entries();

/// Exact-key lookup into the built-in registry. Unknown keys raise an Error
/// whose message lists every valid key.
const CiModelParams &registry_lookup(double freq_ghz, Scenario scenario, AntennaMode mode,
                                     BeamSelection beam);

} // namespace thzprop

#endif

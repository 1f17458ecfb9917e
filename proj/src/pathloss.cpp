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

#include "thzprop/pathloss.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "thzprop/errors.hpp"

namespace thzprop
{

namespace
{

constexpr auto kDir = AntennaMode::Directional;
constexpr auto kOmni = AntennaMode::Omnidirectional;
constexpr auto kNa = BeamSelection::NotApplicable;

CiModelParams entry(double freq, Scenario sc, AntennaMode mode, BeamSelection beam, double n,
                    std::optional<double> sigma, bool censored = false)
{
    return CiModelParams{freq, n, sigma, sc, mode, beam, censored};
}

// Fitted urban microcell CI parameters per band. Sigma slots without a
// published value are deliberately absent, not guessed. The 142 GHz
// NLOS-arbitrary fit only saw links inside the 152 dB dynamic range, hence
// the censored flag.
const std::array<CiModelParams, 15> kRegistry = {
    entry(142.0, Scenario::LOS, kDir, kNa, 2.1, 2.8),
    entry(142.0, Scenario::NLOS, kDir, BeamSelection::Best, 3.1, 8.3),
    entry(142.0, Scenario::NLOS, kDir, BeamSelection::Arbitrary, 3.6, 9.1, true),
    entry(142.0, Scenario::LOS, kOmni, kNa, 1.9, 2.7),
    entry(142.0, Scenario::NLOS, kOmni, kNa, 2.9, 8.2),

    entry(73.0, Scenario::LOS, kDir, kNa, 2.0, 1.9),
    entry(73.0, Scenario::NLOS, kDir, BeamSelection::Best, 3.1, std::nullopt),
    entry(73.0, Scenario::NLOS, kDir, BeamSelection::Arbitrary, 4.6, std::nullopt),
    entry(73.0, Scenario::LOS, kOmni, kNa, 1.9, 1.7),
    entry(73.0, Scenario::NLOS, kOmni, kNa, 2.8, 8.7),

    entry(28.0, Scenario::LOS, kDir, kNa, 1.9, 1.1),
    entry(28.0, Scenario::NLOS, kDir, BeamSelection::Best, 3.5, std::nullopt),
    entry(28.0, Scenario::NLOS, kDir, BeamSelection::Arbitrary, 4.1, std::nullopt),
    entry(28.0, Scenario::LOS, kOmni, kNa, 2.1, 3.6),
    entry(28.0, Scenario::NLOS, kOmni, kNa, 3.4, 9.7),
};

std::string format_freq(double freq_ghz)
{
    std::ostringstream out;
    out << freq_ghz;
    return out.str();
}

} // namespace

std::string to_string(AntennaMode m)
{
    return m == AntennaMode::Directional ? "directional" : "omnidirectional";
}

std::string to_string(BeamSelection b)
{
    switch (b)
    {
    case BeamSelection::Best:
        return "best";
    case BeamSelection::Arbitrary:
        return "arbitrary";
    default:
        return "na";
    }
}

AntennaMode antenna_mode_from_string(std::string_view text)
{
    if (text == "directional" || text == "dir")
        return AntennaMode::Directional;
    if (text == "omnidirectional" || text == "omni")
        return AntennaMode::Omnidirectional;
    throw Error("unknown antenna mode '" + std::string(text) +
                "' (expected directional|omni)");
}

BeamSelection beam_selection_from_string(std::string_view text)
{
    if (text == "best")
        return BeamSelection::Best;
    if (text == "arbitrary")
        return BeamSelection::Arbitrary;
    if (text == "na" || text.empty())
        return BeamSelection::NotApplicable;
    throw Error("unknown beam selection '" + std::string(text) +
                "' (expected best|arbitrary|na)");
}

std::string registry_key_string(double freq_ghz, Scenario scenario, AntennaMode mode,
                                BeamSelection beam)
{
    return format_freq(freq_ghz) + "/" + to_string(scenario) + "/" + to_string(mode) + "/" +
           to_string(beam);
}

void validate(const CiModelParams &params)
{
    if (!(params.freq_ghz > 0.0))
        throw Error("freq_ghz must be positive");
    if (!(params.ple_n > 0.0))
        throw Error("ple_n must be positive");
    if (params.sigma_db && *params.sigma_db < 0.0)
        throw Error("sigma_db must be >= 0 dB");
    const bool beam_free = params.antenna_mode == AntennaMode::Omnidirectional ||
                           params.scenario == Scenario::LOS;
    if (beam_free != (params.beam_selection == BeamSelection::NotApplicable))
        throw Error("beam_selection must be 'na' exactly for omnidirectional or LOS entries");
}

double fspl_db(double freq_ghz, double distance_m)
{
    if (!(freq_ghz > 0.0))
        throw Error("fspl_db: freq_ghz must be positive");
    if (!(distance_m > 0.0))
        throw Error("fspl_db: distance_m must be positive");
    return 32.4 + 20.0 * std::log10(freq_ghz) + 20.0 * std::log10(distance_m);
}

double ci_path_loss_db(const CiModelParams &params, double distance_m, double shadow_db)
{
    validate(params);
    if (!(distance_m >= 1.0))
        throw Error("ci_path_loss_db: model undefined below the 1 m reference distance");
    return fspl_db(params.freq_ghz, 1.0) + 10.0 * params.ple_n * std::log10(distance_m) +
           shadow_db;
}

std::span<const CiModelParams> registry_entries()
{
    return kRegistry;
}

const CiModelParams &registry_lookup(double freq_ghz, Scenario scenario, AntennaMode mode,
                                     BeamSelection beam)
{
    for (const CiModelParams &p : kRegistry)
        if (p.freq_ghz == freq_ghz && p.scenario == scenario && p.antenna_mode == mode &&
            p.beam_selection == beam)
            return p;

    std::string msg = "no registry entry for " +
                      registry_key_string(freq_ghz, scenario, mode, beam) + "; valid keys:";
    for (const CiModelParams &p : kRegistry)
        msg += " " + registry_key_string(p.freq_ghz, p.scenario, p.antenna_mode,
                                         p.beam_selection);
    throw Error(msg);
}

} // namespace thzprop

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

#ifndef THZPROP_LINKBUDGET_HPP
#define THZPROP_LINKBUDGET_HPP

#include <cstdint>

// Free-space link budgets, detectability under a sounder's dynamic range,
// rooftop/air-to-ground elevation geometry, and the foliage slant-loss model.

namespace thzprop
{

/// Transmit chain and dynamic range of a measurement system. Defaults match
/// the 142 GHz wideband sounder: 0 dBm TX into 27 dBi horns (27 dBm EIRP),
/// 152 dB maximum measurable path loss at a 5 dB SNR threshold.
struct LinkBudget
{
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 27.0;
    double rx_gain_dbi = 27.0;
    double freq_ghz = 142.0;
    double max_measurable_pl_db = 152.0;
    double snr_threshold_db = 5.0;

    double eirp_dbm() const { return tx_power_dbm + tx_gain_dbi; }

    /// Same chain with the transmit power shifted to reach the given EIRP.
    /// The measurable path loss budget scales with the EIRP delta.
    LinkBudget with_eirp(double eirp_dbm_target) const;
};

void validate(const LinkBudget &budget);

/// Rooftop receiver over a ground-mounted transmitter. Defaults: 38.2 m
/// rooftop RX, 1.5 m mobile TX.
struct RooftopGeometry
{
    double rx_height_m = 38.2;
    double tx_height_m = 1.5;
    double boresight_elevation_deg = 45.0;
    double slant_distance_m = 52.0;
};

void validate(const RooftopGeometry &geometry);

/// Homogeneous canopy slab crossed at a slant. The deterministic form is
/// rate x slant length; the statistical form draws a Gaussian loss with the
/// given mean/sd (not length-dependent).
struct FoliageModel
{
    double canopy_depth_m = 5.0;
    double attenuation_rate_db_per_m = 0.9; // 142 GHz; 73 GHz uses 0.4
    double statistical_mean_db = 6.9;
    double statistical_sd_db = 3.0;

    /// Rate preset per band: 0.9 dB/m at 142 GHz, 0.4 dB/m at 73 GHz.
    static FoliageModel for_band(double freq_ghz);
};

void validate(const FoliageModel &model);

/// tx_power + gains - FSPL(freq, distance). Distance must be >= 1 m.
double received_power_fs_dbm(const LinkBudget &budget, double distance_m);

/// Slant length through the canopy: depth / sin(elevation).
/// Elevation must lie in (0, 90] degrees; a horizontal path is unbounded.
double foliage_slant_length_m(double elevation_deg, double canopy_depth_m);

/// Deterministic foliage loss: attenuation rate x slant length.
double foliage_loss_db(const FoliageModel &model, double slant_length_m);

/// Statistical foliage loss: counter-based Gaussian draw with the model's
/// mean/sd. Same (seed, index) always yields the same loss.
double sample_foliage_loss_db(const FoliageModel &model, std::uint64_t seed,
                              std::uint64_t index = 0);

/// Free-space received power minus deterministic foliage loss along the
/// slant at the given elevation.
double predict_received_power_foliage_dbm(const LinkBudget &budget, double distance_m,
                                          double elevation_deg, const FoliageModel &model);

/// True when the path loss fits inside the measurable range. The boundary
/// is inclusive: a link exactly at the maximum is detectable.
bool detectable(const LinkBudget &budget, double path_loss_db);

struct ElevationGeometry
{
    double elevation_deg = 0.0;
    double slant_distance_m = 0.0;
};

/// Planning helper: boresight elevation and slant range from heights and
/// ground distance over flat ground.
ElevationGeometry elevation_from_geometry(double rx_height_m, double tx_height_m,
                                          double ground_distance_m);

} // namespace thzprop

#endif

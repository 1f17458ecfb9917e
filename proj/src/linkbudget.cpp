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

#include "thzprop/linkbudget.hpp"

#include <cmath>

#include "thzprop/errors.hpp"
#include "thzprop/pathloss.hpp"
#include "thzprop/random.hpp"
#include "thzprop/units.hpp"

namespace thzprop
{

LinkBudget LinkBudget::with_eirp(double eirp_dbm_target) const
{
    LinkBudget out = *this;
    const double delta = eirp_dbm_target - eirp_dbm();
    out.tx_power_dbm += delta;
    out.max_measurable_pl_db += delta;
    return out;
}

void validate(const LinkBudget &budget)
{
    if (!(budget.freq_ghz > 0.0))
        throw Error("link budget: freq_ghz must be positive");
    if (!(budget.max_measurable_pl_db > 0.0))
        throw Error("link budget: max_measurable_pl_db must be positive");
    if (budget.snr_threshold_db < 0.0)
        throw Error("link budget: snr_threshold_db must be >= 0 dB");
}

void validate(const RooftopGeometry &geometry)
{
    if (!(geometry.slant_distance_m > 0.0))
        throw Error("rooftop geometry: slant_distance_m must be positive");
    if (!(geometry.boresight_elevation_deg > 0.0) || geometry.boresight_elevation_deg > 90.0)
        throw Error("rooftop geometry: boresight elevation must lie in (0, 90] degrees");
    const double dh = geometry.rx_height_m - geometry.tx_height_m;
    if (geometry.boresight_elevation_deg == 90.0 && geometry.slant_distance_m < dh)
        throw Error("rooftop geometry: slant distance shorter than the height difference");
}

FoliageModel FoliageModel::for_band(double freq_ghz)
{
    FoliageModel model;
    if (freq_ghz == 142.0)
        model.attenuation_rate_db_per_m = 0.9;
    else if (freq_ghz == 73.0)
        model.attenuation_rate_db_per_m = 0.4;
    else
        throw Error("no foliage attenuation rate preset for " + std::to_string(freq_ghz) +
                    " GHz (presets: 142, 73)");
    return model;
}

void validate(const FoliageModel &model)
{
    if (!(model.canopy_depth_m > 0.0))
        throw Error("foliage model: canopy_depth_m must be positive");
    if (model.attenuation_rate_db_per_m < 0.0)
        throw Error("foliage model: attenuation rate must be >= 0");
    if (model.statistical_mean_db < 0.0 || model.statistical_sd_db < 0.0)
        throw Error("foliage model: statistical parameters must be >= 0");
}

double received_power_fs_dbm(const LinkBudget &budget, double distance_m)
{
    validate(budget);
    if (!(distance_m >= 1.0))
        throw Error("received_power_fs_dbm: distance_m must be >= 1 m");
    return budget.tx_power_dbm + budget.tx_gain_dbi + budget.rx_gain_dbi -
           fspl_db(budget.freq_ghz, distance_m);
}

double foliage_slant_length_m(double elevation_deg, double canopy_depth_m)
{
    if (!(canopy_depth_m > 0.0))
        throw Error("foliage_slant_length_m: canopy_depth_m must be positive");
    if (!(elevation_deg > 0.0) || elevation_deg > 90.0)
        throw Error("foliage_slant_length_m: elevation must lie in (0, 90] degrees "
                    "(a horizontal path through the canopy is unbounded)");
    return canopy_depth_m / std::sin(deg_to_rad(elevation_deg));
}

double foliage_loss_db(const FoliageModel &model, double slant_length_m)
{
    validate(model);
    if (slant_length_m < 0.0)
        throw Error("foliage_loss_db: slant length must be >= 0");
    return model.attenuation_rate_db_per_m * slant_length_m;
}

double sample_foliage_loss_db(const FoliageModel &model, std::uint64_t seed,
                              std::uint64_t index)
{
    validate(model);
    return model.statistical_mean_db + model.statistical_sd_db * rng::normal_at(seed, index);
}

double predict_received_power_foliage_dbm(const LinkBudget &budget, double distance_m,
                                          double elevation_deg, const FoliageModel &model)
{
    const double slant = foliage_slant_length_m(elevation_deg, model.canopy_depth_m);
    return received_power_fs_dbm(budget, distance_m) - foliage_loss_db(model, slant);
}

bool detectable(const LinkBudget &budget, double path_loss_db)
{
    validate(budget);
    return path_loss_db <= budget.max_measurable_pl_db;
}

ElevationGeometry elevation_from_geometry(double rx_height_m, double tx_height_m,
                                          double ground_distance_m)
{
    if (!(ground_distance_m > 0.0))
        throw Error("elevation_from_geometry: ground_distance_m must be positive");
    if (!(rx_height_m > tx_height_m))
        throw Error("elevation_from_geometry: rx_height_m must exceed tx_height_m");
    const double dh = rx_height_m - tx_height_m;
    ElevationGeometry out;
    out.elevation_deg = rad_to_deg(std::atan2(dh, ground_distance_m));
    out.slant_distance_m = std::hypot(dh, ground_distance_m);
    return out;
}

} // namespace thzprop

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

#ifndef THZPROP_CHANNEL_DATA_HPP
#define THZPROP_CHANNEL_DATA_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Domain types for directional channel measurement campaigns plus CSV/PDP
// file ingestion. Angles are degrees everywhere; delays are nanoseconds;
// powers are dBm at interfaces and linear mW inside PowerDelayProfile.

namespace thzprop
{

enum class Scenario
{
    LOS,
    NLOS
};

std::string to_string(Scenario s);
Scenario scenario_from_string(std::string_view text);

/// Antenna pointing. Azimuth lives in [0, 360); elevation in [-90, +90]
/// with 0 on the horizon and positive values uptilted.
struct PointingDirection
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

/// Wraps azimuth into [0, 360) and validates the elevation range.
PointingDirection make_pointing(double azimuth_deg, double elevation_deg);

/// Great-circle angle between two pointing directions, in degrees.
double angular_separation_deg(const PointingDirection &a, const PointingDirection &b);

/// Uniformly binned delay/power series. start_delay_ns is the center of the
/// first bin; bin i sits at start_delay_ns + i * bin_width_ns.
struct PowerDelayProfile
{
    double start_delay_ns = 0.0;
    double bin_width_ns = kDefaultBinWidthNs;
    std::vector<double> power_mw;
    double noise_floor_dbm = -100.0;

    /// Sounder delay resolution: reciprocal of the 500 MHz baseband bandwidth.
    static constexpr double kDefaultBinWidthNs = 2.0;

    std::size_t bin_count() const { return power_mw.size(); }
    double delay_at(std::size_t i) const
    {
        return start_delay_ns + static_cast<double>(i) * bin_width_ns;
    }
    double total_power_mw() const;
};

void validate(const PowerDelayProfile &pdp);

/// One resolvable arriving path extracted from a PDP. The direction is
/// optional; it is only needed when de-duplicating directional sweeps.
struct MultipathComponent
{
    double delay_ns = 0.0;
    double power_dbm = 0.0;
    std::optional<PointingDirection> direction;
};

/// One measured TX/RX pointing combination.
struct DirectionalRecord
{
    std::string tx_id;
    std::string rx_id;
    double distance_3d_m = 1.0;
    Scenario scenario = Scenario::LOS;
    PointingDirection tx_pointing;
    PointingDirection rx_pointing;
    double freq_ghz = 142.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 27.0;
    double rx_gain_dbi = 27.0;
    double hpbw_deg = 8.0;
    std::optional<double> received_power_dbm;
    std::optional<PowerDelayProfile> pdp;
};

/// Checks all record invariants, including that at least one of
/// received_power_dbm / pdp is present. Distances below the 1 m model
/// reference are rejected here, so downstream fits never see them.
void validate(const DirectionalRecord &record);

struct MeasurementSet
{
    std::vector<DirectionalRecord> records;
    std::string campaign_label;
};

/// Per-record validation plus the shared-frequency invariant.
void validate(const MeasurementSet &set);

/// Exact, ordered header of the measurement CSV exchange format.
inline constexpr std::string_view kMeasurementCsvHeader =
    "tx_id,rx_id,distance_3d_m,scenario,tx_az_deg,tx_el_deg,rx_az_deg,rx_el_deg,"
    "freq_ghz,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,hpbw_deg,received_power_dbm";

struct CsvParseOptions
{
    /// Permit rows with an empty received_power_dbm cell. Intended for flows
    /// that attach PDPs to records afterwards; call validate(set) once done.
    bool allow_missing_power = false;
    std::string campaign_label;
};

MeasurementSet parse_measurement_csv(std::istream &source, const CsvParseOptions &opts = {});
MeasurementSet parse_measurement_csv(std::string_view text, const CsvParseOptions &opts = {});

/// Serializes with shortest round-trip number formatting, so
/// parse(to_csv(set)) reproduces every numeric field exactly.
std::string to_csv(const MeasurementSet &set);

/// PDP file format: `# key=value` metadata lines (noise_floor_dbm required),
/// an optional `delay_ns,power_dbm` header, then one `delay,power` row per
/// bin. Delays must be uniformly spaced within 1e-6 ns; a single-row file
/// falls back to the default 2 ns bin width.
PowerDelayProfile parse_pdp_file(std::istream &source);
PowerDelayProfile parse_pdp_file(std::string_view text);

std::string to_pdp_file(const PowerDelayProfile &pdp);

} // namespace thzprop

#endif

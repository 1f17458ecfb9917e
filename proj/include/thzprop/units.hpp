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

#ifndef THZPROP_UNITS_HPP
#define THZPROP_UNITS_HPP

#include <cmath>
#include <limits>
#include <numbers>

namespace thzprop
{

/// Speed of light in m/ns (delays are kept in nanoseconds throughout).
inline constexpr double kSpeedOfLightMPerNs = 0.299792458;

inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;

inline double deg_to_rad(double deg) { return deg / kDegPerRad; }
inline double rad_to_deg(double rad) { return rad * kDegPerRad; }

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// 0 mW maps to -inf dBm.
inline double mw_to_dbm(double mw)
{
    if (mw <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(mw);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace thzprop

#endif

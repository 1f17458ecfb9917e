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
// Unless required by applicable law or agreed to in writing,软件
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "campaign_fixtures.hpp"
#include "thzprop/errors.hpp"
#include "thzprop/linkbudget.hpp"
#include "thzprop/pathloss.hpp"
#include "thzprop/random.hpp"

using namespace thzprop;
using namespace thzprop::tests;

namespace
{

double mean(const std::vector<double> &v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double> &v)
{
    const double m = mean(v);
    double sum = 0.0;
    for (const double x : v)
        sum += (x - m) * (x - m);
    return std::sqrt(sum / static_cast<double>(v.size() - 1));
}

} // namespace

TEST_CASE("free space received power against the campaign table")
{
    const LinkBudget budget = rooftop_budget();
    CHECK(budget.eirp_dbm() == 25.0);

    for (const RooftopLink &link : kRooftopCampaign)
        CHECK(std::abs(received_power_fs_dbm(budget, link.distance_m) -
                       link.predicted_fs_dbm) < 0.1);
}

TEST_CASE("free space received power basics")
{
    LinkBudget isotropic;
    isotropic.tx_gain_dbi = 0.0;
    isotropic.rx_gain_dbi = 0.0;
    CHECK(received_power_fs_dbm(isotropic, 1.0) ==
          doctest::Approx(-fspl_db(142.0, 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(received_power_fs_dbm(isotropic, 0.5), Error);

    // exactly 20 log10(2) per distance doubling
    const LinkBudget budget = rooftop_budget();
    const double shift = 20.0 * std::log10(2.0);
    for (double d = 1.0; d < 500.0; d *= 2.0)
        CHECK(std::abs(received_power_fs_dbm(budget, d) -
                       received_power_fs_dbm(budget, 2.0 * d) - shift) < 1e-9);
}

TEST_CASE("foliage slant length")
{
    CHECK(foliage_slant_length_m(30.0, 5.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(foliage_slant_length_m(90.0, 5.0) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK_THROWS_AS(foliage_slant_length_m(0.0, 5.0), Error);
    CHECK_THROWS_AS(foliage_slant_length_m(-10.0, 5.0), Error);
    CHECK_THROWS_AS(foliage_slant_length_m(91.0, 5.0), Error);

    // strictly decreasing in elevation
    double prev = foliage_slant_length_m(1.0, 5.0);
    for (double el = 5.0; el <= 90.0; el += 5.0)
    {
        const double slant = foliage_slant_length_m(el, 5.0);
        CHECK(slant < prev);
        prev = slant;
    }
}

TEST_CASE("slant sweep statistics over the campaign elevations")
{
    std::vector<double> slants;
    for (const double el : kSlantSweepElevationsDeg)
        slants.push_back(foliage_slant_length_m(el, 5.0));
    CHECK(std::abs(mean(slants) - 7.9) < 0.1);
    CHECK(std::abs(sample_sd(slants) - 3.4) < 0.1);
}

TEST_CASE("foliage loss")
{
    FoliageModel model; // 0.9 dB/m over a 5 m canopy
    CHECK(foliage_loss_db(model, 7.9) == doctest::Approx(7.11).epsilon(1e-9));
    CHECK(foliage_loss_db(model, 0.0) == 0.0);
    CHECK_THROWS_AS(foliage_loss_db(model, -1.0), Error);

    // losses along the campaign sweep stay inside the observed 3-11 dB band
    const double loss = foliage_loss_db(model, foliage_slant_length_m(40.0, 5.0));
    CHECK(loss > 3.0);
    CHECK(loss < 11.0);

    CHECK(FoliageModel::for_band(73.0).attenuation_rate_db_per_m == 0.4);
    CHECK(FoliageModel::for_band(142.0).attenuation_rate_db_per_m == 0.9);
    CHECK_THROWS_AS(FoliageModel::for_band(28.0), Error);
}

TEST_CASE("campaign table closure")
{
    // predicted-minus-measured reproduces the loss column row by row
    for (const RooftopLink &link : kRooftopCampaign)
        CHECK(std::abs((link.predicted_fs_dbm - link.measured_dbm) - link.foliage_loss_db) <
              0.1);

    // foliage-blocked rows: mean 6.9 dB, sample sd 3.0 dB
    const LinkBudget budget = rooftop_budget();
    std::vector<double> losses;
    for (const RooftopLink &link : kRooftopCampaign)
        if (link.foliage_blocked)
            losses.push_back(received_power_fs_dbm(budget, link.distance_m) -
                             link.measured_dbm);
    REQUIRE(losses.size() == 7);
    CHECK(std::abs(mean(losses) - 6.9) < 0.1);
    CHECK(std::abs(sample_sd(losses) - 3.0) < 0.1);

    // TX7 loss recomputed from the table rows
    CHECK(std::abs((-63.7) - (-74.5) - 10.8) < 1e-9);
}

TEST_CASE("foliage-aware prediction")
{
    const LinkBudget budget = rooftop_budget();
    FoliageModel model;

    SUBCASE("30-degree link lands near the measured value")
    {
        const double predicted =
            predict_received_power_foliage_dbm(budget, 70.6, 30.0, model);
        CHECK(predicted ==
              doctest::Approx(received_power_fs_dbm(budget, 70.6) - 9.0).epsilon(1e-9));
        CHECK(std::abs(predicted - (-70.8)) < 1.5);
    }
    SUBCASE("zero rate reduces to free space")
    {
        FoliageModel clear = model;
        clear.attenuation_rate_db_per_m = 0.0;
        for (const RooftopLink &link : kRooftopCampaign)
            if (!link.foliage_blocked)
            {
                const double predicted = predict_received_power_foliage_dbm(
                    budget, link.distance_m, link.elevation_deg, clear);
                CHECK(predicted ==
                      doctest::Approx(received_power_fs_dbm(budget, link.distance_m)));
                CHECK(std::abs(predicted - link.measured_dbm) <= 0.7);
            }
    }
    SUBCASE("vertical path crosses exactly the canopy depth")
    {
        const double predicted =
            predict_received_power_foliage_dbm(budget, 50.0, 90.0, model);
        CHECK(predicted ==
              doctest::Approx(received_power_fs_dbm(budget, 50.0) - 4.5).epsilon(1e-9));
    }
}

TEST_CASE("statistical foliage sampler")
{
    const FoliageModel model;
    const std::size_t n = 1000000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double x = sample_foliage_loss_db(model, 99, i);
        sum += x;
        sum_sq += x * x;
    }
    const double m = sum / static_cast<double>(n);
    const double sd = std::sqrt(sum_sq / static_cast<double>(n) - m * m);
    // 4x standard error bounds at N = 1e6
    CHECK(std::abs(m - 6.9) < 4.0 * 3.0 / 1000.0);
    CHECK(std::abs(sd - 3.0) < 4.0 * 3.0 / std::sqrt(2.0e6));

    // counter-based: same (seed, index) reproduces the draw
    CHECK(sample_foliage_loss_db(model, 99, 5) == sample_foliage_loss_db(model, 99, 5));
    CHECK(sample_foliage_loss_db(model, 99, 5) != sample_foliage_loss_db(model, 100, 5));
}

TEST_CASE("detectability")
{
    const LinkBudget budget = rooftop_budget();
    CHECK(detectable(budget, 151.9));
    CHECK_FALSE(detectable(budget, 152.1));
    CHECK(detectable(budget, 152.0)); // boundary is inclusive

    // monotone: anything below a detectable loss is detectable
    for (double pl = 10.0; pl <= 152.0; pl += 7.0)
        CHECK(detectable(budget, pl));
}

TEST_CASE("elevation geometry helper")
{
    SUBCASE("isoceles layout")
    {
        const ElevationGeometry g = elevation_from_geometry(38.2, 1.5, 36.7);
        CHECK(g.elevation_deg == doctest::Approx(45.0).epsilon(1e-12));
        CHECK(g.slant_distance_m == doctest::Approx(36.7 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(std::abs(g.slant_distance_m - 51.9) < 0.05);
    }
    SUBCASE("steep link")
    {
        const ElevationGeometry g = elevation_from_geometry(38.2, 1.5, 10.0);
        CHECK(std::abs(g.elevation_deg - 74.8) < 0.05);
    }
    SUBCASE("elevation decreases with ground distance")
    {
        double prev = 90.0;
        for (double ground = 1.0; ground < 5000.0; ground *= 3.0)
        {
            const ElevationGeometry g = elevation_from_geometry(38.2, 1.5, ground);
            CHECK(g.elevation_deg < prev);
            prev = g.elevation_deg;
        }
    }
    SUBCASE("domain errors")
    {
        CHECK_THROWS_AS(elevation_from_geometry(38.2, 1.5, 0.0), Error);
        CHECK_THROWS_AS(elevation_from_geometry(1.5, 38.2, 10.0), Error);
    }
}

TEST_CASE("budget validation and EIRP")
{
    LinkBudget budget;
    CHECK(budget.eirp_dbm() == 27.0); // 0 dBm into a 27 dBi horn
    CHECK_NOTHROW(validate(budget));

    const LinkBudget boosted = budget.with_eirp(37.0);
    CHECK(boosted.eirp_dbm() == doctest::Approx(37.0));
    CHECK(boosted.max_measurable_pl_db == doctest::Approx(162.0));

    budget.max_measurable_pl_db = 0.0;
    CHECK_THROWS_AS(validate(budget), Error);
}

TEST_CASE("rooftop geometry validation")
{
    RooftopGeometry geometry; // defaults: 38.2 m RX over a 1.5 m TX
    CHECK_NOTHROW(validate(geometry));
    geometry.boresight_elevation_deg = 90.0;
    geometry.slant_distance_m = 36.0; // shorter than the 36.7 m height gap
    CHECK_THROWS_AS(validate(geometry), Error);
}

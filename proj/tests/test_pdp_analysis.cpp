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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "thzprop/errors.hpp"
#include "thzprop/pathloss.hpp"
#include "thzprop/pdp_analysis.hpp"
#include "thzprop/random.hpp"
#include "thzprop/units.hpp"

using namespace thzprop;

namespace
{

PowerDelayProfile make_pdp(std::vector<double> power_mw, double start_ns = 0.0,
                           double width_ns = 2.0, double floor_dbm = -100.0)
{
    PowerDelayProfile pdp;
    pdp.start_delay_ns = start_ns;
    pdp.bin_width_ns = width_ns;
    pdp.power_mw = std::move(power_mw);
    pdp.noise_floor_dbm = floor_dbm;
    return pdp;
}

// Ten peaks in four delay groups; the first peak is the boresight path at
// 144.47 ns for the 43.34 m link. Group gaps are 40 / 50 / 30 ns, intra-group
// gaps at most 6 ns.
PowerDelayProfile four_cluster_pdp()
{
    PowerDelayProfile pdp = make_pdp(std::vector<double>(160, 0.0), 0.47, 2.0, -100.0);
    const struct
    {
        std::size_t bin;
        double dbm;
    } peaks[] = {
        {72, -72.0},                                              // boresight
        {92, -80.0}, {95, -82.0}, {97, -84.0}, {100, -85.0},      // second group
        {125, -86.0}, {128, -87.0}, {130, -88.0},                 // third group
        {145, -90.0}, {148, -91.0},                               // fourth group
    };
    for (const auto &peak : peaks)
        pdp.power_mw[peak.bin] = dbm_to_mw(peak.dbm);
    return pdp;
}

DirectionalRecord make_record(double az_tx, double el_tx, double az_rx, double el_rx,
                              double received_dbm)
{
    DirectionalRecord r;
    r.tx_id = "TX1";
    r.rx_id = "RX23";
    r.distance_3d_m = 43.34;
    r.scenario = Scenario::LOS;
    r.tx_pointing = make_pointing(az_tx, el_tx);
    r.rx_pointing = make_pointing(az_rx, el_rx);
    r.freq_ghz = 142.0;
    r.tx_power_dbm = 0.0;
    r.tx_gain_dbi = 27.0;
    r.rx_gain_dbi = 27.0;
    r.hpbw_deg = 8.0;
    r.received_power_dbm = received_dbm;
    return r;
}

} // namespace

TEST_CASE("thresholding")
{
    SUBCASE("all bins below the cut vanish")
    {
        const PowerDelayProfile pdp = make_pdp({dbm_to_mw(-99.0), dbm_to_mw(-96.0)});
        const PowerDelayProfile cut = threshold_pdp(pdp, 5.0);
        CHECK(cut.power_mw[0] == 0.0);
        CHECK(cut.power_mw[1] == 0.0);
    }
    SUBCASE("a bin above the cut is preserved exactly")
    {
        const double keep = dbm_to_mw(-90.0); // floor + 10 dB
        const PowerDelayProfile cut = threshold_pdp(make_pdp({dbm_to_mw(-98.0), keep}), 5.0);
        CHECK(cut.power_mw[0] == 0.0);
        CHECK(cut.power_mw[1] == keep);
    }
    SUBCASE("idempotent")
    {
        const PowerDelayProfile pdp =
            make_pdp({dbm_to_mw(-98.0), dbm_to_mw(-90.0), 0.0, dbm_to_mw(-94.0)});
        const PowerDelayProfile once = threshold_pdp(pdp, 5.0);
        const PowerDelayProfile twice = threshold_pdp(once, 5.0);
        CHECK(once.power_mw == twice.power_mw);
    }
    SUBCASE("boundary bin at exactly floor + threshold survives")
    {
        const double at_cut = dbm_to_mw(-95.0);
        const PowerDelayProfile cut = threshold_pdp(make_pdp({at_cut}), 5.0);
        CHECK(cut.power_mw[0] == at_cut);
    }
}

TEST_CASE("averaging")
{
    SUBCASE("identical PDPs average to themselves")
    {
        const PowerDelayProfile pdp = make_pdp({1.0e-9, 2.0e-9, 0.5e-9});
        const std::vector<PowerDelayProfile> twenty(20, pdp);
        const PowerDelayProfile avg = average_pdps(twenty);
        for (std::size_t i = 0; i < pdp.bin_count(); ++i)
            CHECK(avg.power_mw[i] == doctest::Approx(pdp.power_mw[i]).epsilon(1e-12));
    }
    SUBCASE("complementary taps split evenly")
    {
        const double p = 4.0e-9;
        const std::vector<PowerDelayProfile> pair = {make_pdp({0.0, p}), make_pdp({p, 0.0})};
        const PowerDelayProfile avg = average_pdps(pair);
        CHECK(avg.power_mw[0] == doctest::Approx(p / 2.0));
        CHECK(avg.power_mw[1] == doctest::Approx(p / 2.0));
    }
    SUBCASE("mismatched grids are rejected")
    {
        const std::vector<PowerDelayProfile> bad = {make_pdp({1e-9, 1e-9}),
                                                    make_pdp({1e-9, 1e-9}, 0.0, 1.0)};
        CHECK_THROWS_AS(average_pdps(bad), Error);
        const std::vector<PowerDelayProfile> bad_floor = {
            make_pdp({1e-9}), make_pdp({1e-9}, 0.0, 2.0, -90.0)};
        CHECK_THROWS_AS(average_pdps(bad_floor), Error);
    }
    SUBCASE("noise variance shrinks like 1/N")
    {
        // Uniform(0,1) mW bins: var(single) = 1/12, var(mean of N) = 1/(12N).
        const std::uint64_t seed = 5150;
        const std::size_t bins = 4096;
        auto noise_pdp = [&](std::uint64_t which) {
            std::vector<double> p(bins);
            for (std::size_t i = 0; i < bins; ++i)
                p[i] = rng::uniform01_at(seed, which * bins + i, 0);
            return make_pdp(std::move(p));
        };
        auto bin_variance = [&](const PowerDelayProfile &pdp) {
            double mean = 0.0;
            for (const double p : pdp.power_mw)
                mean += p;
            mean /= static_cast<double>(pdp.bin_count());
            double var = 0.0;
            for (const double p : pdp.power_mw)
                var += (p - mean) * (p - mean);
            return var / static_cast<double>(pdp.bin_count());
        };

        for (const std::size_t n : {4ULL, 16ULL, 64ULL})
        {
            std::vector<PowerDelayProfile> batch;
            for (std::size_t k = 0; k < n; ++k)
                batch.push_back(noise_pdp(k));
            const double var = bin_variance(average_pdps(batch));
            const double expected = (1.0 / 12.0) / static_cast<double>(n);
            CHECK(var > 0.6 * expected);
            CHECK(var < 1.4 * expected);
        }
    }
}

TEST_CASE("mpc extraction")
{
    SUBCASE("single nonzero bin")
    {
        const auto mpcs = extract_mpcs(make_pdp({0.0, dbm_to_mw(-80.0), 0.0}));
        REQUIRE(mpcs.size() == 1);
        CHECK(mpcs[0].delay_ns == doctest::Approx(2.0));
        CHECK(mpcs[0].power_dbm == doctest::Approx(-80.0));
    }
    SUBCASE("monotone ramp peaks at the last bin")
    {
        const auto mpcs = extract_mpcs(make_pdp({1e-10, 2e-10, 3e-10, 4e-10}));
        REQUIRE(mpcs.size() == 1);
        CHECK(mpcs[0].delay_ns == doctest::Approx(6.0));
    }
    SUBCASE("plateau resolves to its latest bin")
    {
        const auto mpcs = extract_mpcs(make_pdp({1e-10, 5e-10, 5e-10, 5e-10, 2e-10}));
        REQUIRE(mpcs.size() == 1);
        CHECK(mpcs[0].delay_ns == doctest::Approx(6.0)); // bin 3
    }
    SUBCASE("boundary bins are eligible")
    {
        const auto mpcs = extract_mpcs(make_pdp({5e-10, 1e-10, 4e-10}));
        REQUIRE(mpcs.size() == 2);
        CHECK(mpcs[0].delay_ns == doctest::Approx(0.0));
        CHECK(mpcs[1].delay_ns == doctest::Approx(4.0));
    }
    SUBCASE("zero PDP yields no MPCs")
    {
        CHECK(extract_mpcs(make_pdp({0.0, 0.0, 0.0})).empty());
    }
    SUBCASE("constructed ten-peak profile recovers all ten")
    {
        const auto mpcs = extract_mpcs(four_cluster_pdp());
        CHECK(mpcs.size() == 10);
    }
}

TEST_CASE("time cluster partitioning")
{
    auto mpc_at = [](double delay) { return MultipathComponent{delay, -80.0, std::nullopt}; };

    SUBCASE("two groups split by the void")
    {
        const std::vector<MultipathComponent> mpcs = {mpc_at(0), mpc_at(5), mpc_at(60),
                                                      mpc_at(65)};
        const auto clusters = partition_time_clusters(mpcs, 25.0);
        REQUIRE(clusters.size() == 2);
        CHECK(clusters[0].mpc_indices == std::vector<std::size_t>{0, 1});
        CHECK(clusters[1].mpc_indices == std::vector<std::size_t>{2, 3});
        CHECK(clusters[0].start_ns == 0.0);
        CHECK(clusters[0].end_ns == 5.0);
        CHECK(clusters[1].start_ns == 60.0);
    }
    SUBCASE("single MPC forms a single cluster")
    {
        const std::vector<MultipathComponent> mpcs = {mpc_at(42.0)};
        const auto clusters = partition_time_clusters(mpcs, 25.0);
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].start_ns == clusters[0].end_ns);
    }
    SUBCASE("unsorted input is rejected")
    {
        const std::vector<MultipathComponent> mpcs = {mpc_at(10), mpc_at(5)};
        CHECK_THROWS_AS(partition_time_clusters(mpcs, 25.0), Error);
    }
    SUBCASE("four-group structure with the default void")
    {
        const auto mpcs = extract_mpcs(four_cluster_pdp());
        const auto clusters = partition_time_clusters(mpcs, kDefaultMinVoidNs);
        REQUIRE(clusters.size() == 4);
        CHECK(clusters[0].mpc_indices.size() == 1);
        CHECK(clusters[1].mpc_indices.size() == 4);
        CHECK(clusters[2].mpc_indices.size() == 3);
        CHECK(clusters[3].mpc_indices.size() == 2);
    }
    SUBCASE("cluster count is non-increasing in the void interval")
    {
        const std::uint64_t seed = 31;
        for (std::uint64_t trial = 0; trial < 30; ++trial)
        {
            std::vector<MultipathComponent> mpcs;
            double delay = 0.0;
            const std::size_t count = 2 + rng::word_at(seed, trial, 0) % 12;
            for (std::size_t k = 0; k < count; ++k)
            {
                delay += 1.0 + 59.0 * rng::uniform01_at(seed, trial * 100 + k, 1);
                mpcs.push_back(mpc_at(delay));
            }
            std::size_t prev = partition_time_clusters(mpcs, 0.0).size();
            for (const double window : {5.0, 10.0, 25.0, 40.0, 80.0})
            {
                const std::size_t n = partition_time_clusters(mpcs, window).size();
                CHECK(n <= prev);
                prev = n;
            }
        }
    }
}

TEST_CASE("rms delay spread")
{
    SUBCASE("single tap has zero spread")
    {
        CHECK(rms_delay_spread_ns(make_pdp({0.0, 3e-9, 0.0})) == doctest::Approx(0.0));
    }
    SUBCASE("two equal taps 20 ns apart spread by 10")
    {
        const PowerDelayProfile pdp = make_pdp({1e-9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1e-9});
        CHECK(rms_delay_spread_ns(pdp) == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("three equal taps at 0/10/20 ns")
    {
        PowerDelayProfile pdp = make_pdp(std::vector<double>(11, 0.0));
        pdp.power_mw[0] = pdp.power_mw[5] = pdp.power_mw[10] = 1e-9;
        // direct moment evaluation: E[t^2] - E[t]^2 = 500/3 - 100 = 66.667
        CHECK(rms_delay_spread_ns(pdp) == doctest::Approx(std::sqrt(200.0 / 3.0)).epsilon(1e-12));
        CHECK(rms_delay_spread_ns(pdp) == doctest::Approx(8.16497).epsilon(1e-5));
    }
    SUBCASE("zero total power is an error")
    {
        CHECK_THROWS_AS(rms_delay_spread_ns(make_pdp({0.0, 0.0})), Error);
    }
    SUBCASE("shift invariance")
    {
        const PowerDelayProfile base = four_cluster_pdp();
        const double spread = rms_delay_spread_ns(base);
        for (const double shift : {5.0, 100.0, 10000.0})
        {
            PowerDelayProfile moved = base;
            moved.start_delay_ns += shift;
            CHECK(std::abs(rms_delay_spread_ns(moved) - spread) < 1e-9);
        }
    }
    SUBCASE("scale invariance")
    {
        const PowerDelayProfile base = four_cluster_pdp();
        const double spread = rms_delay_spread_ns(base);
        for (const double scale : {1e-3, 7.0, 1e4})
        {
            PowerDelayProfile scaled = base;
            for (double &p : scaled.power_mw)
                p *= scale;
            CHECK(std::abs(rms_delay_spread_ns(scaled) - spread) < 1e-9);
        }
    }
}

TEST_CASE("boresight delay matches the link distance")
{
    const auto mpcs = extract_mpcs(four_cluster_pdp());
    REQUIRE(!mpcs.empty());
    const double expected_ns = 43.34 / kSpeedOfLightMPerNs;
    CHECK(std::abs(mpcs.front().delay_ns - expected_ns) <= 0.5);
    CHECK(mpcs.front().delay_ns == doctest::Approx(144.47).epsilon(1e-9));
}

TEST_CASE("directional path loss")
{
    SUBCASE("explicit arithmetic")
    {
        const DirectionalRecord r = make_record(0, 0, 180, 0, -98.45);
        CHECK(directional_path_loss_db(r) == doctest::Approx(152.45).epsilon(1e-12));
    }
    SUBCASE("isotropic 1 m link reproduces free space")
    {
        DirectionalRecord r = make_record(0, 0, 180, 0, -fspl_db(142.0, 1.0));
        r.distance_3d_m = 1.0;
        r.tx_gain_dbi = 0.0;
        r.rx_gain_dbi = 0.0;
        CHECK(directional_path_loss_db(r) ==
              doctest::Approx(fspl_db(142.0, 1.0)).epsilon(1e-12));
    }
    SUBCASE("gain de-embedding cancels")
    {
        const DirectionalRecord base = make_record(0, 0, 180, 0, -88.0);
        const double pl = directional_path_loss_db(base);
        for (const double g : {-6.0, 3.0, 12.5})
        {
            DirectionalRecord shifted = base;
            shifted.tx_gain_dbi += g;
            *shifted.received_power_dbm += g;
            if (shifted.tx_gain_dbi >= 0.0)
                CHECK(directional_path_loss_db(shifted) == doctest::Approx(pl).epsilon(1e-12));
        }
    }
    SUBCASE("falls back to integrating the thresholded PDP")
    {
        DirectionalRecord r = make_record(0, 0, 180, 0, 0.0);
        r.received_power_dbm.reset();
        r.pdp = make_pdp({dbm_to_mw(-90.0), dbm_to_mw(-85.0), dbm_to_mw(-99.0)});
        const double total = dbm_to_mw(-90.0) + dbm_to_mw(-85.0); // third bin is cut
        CHECK(directional_path_loss_db(r) ==
              doctest::Approx(54.0 - mw_to_dbm(total)).epsilon(1e-12));
    }
    SUBCASE("neither power nor PDP")
    {
        DirectionalRecord r = make_record(0, 0, 180, 0, 0.0);
        r.received_power_dbm.reset();
        CHECK_THROWS_AS(directional_path_loss_db(r), Error);
    }
}

TEST_CASE("omni synthesis")
{
    SUBCASE("single record identity")
    {
        const DirectionalRecord r = make_record(0, 0, 180, 0, -88.0);
        const OmniSynthesisResult omni = synthesize_omni(std::vector{r});
        CHECK(omni.omni_path_loss_db ==
              doctest::Approx(directional_path_loss_db(r)).epsilon(1e-12));
        CHECK(omni.contributing_records == 1);
        CHECK(omni.deduplicated_records == 0);
    }
    SUBCASE("two equal beams add 3.01 dB")
    {
        const DirectionalRecord a = make_record(0, 0, 180, 0, -88.0);
        const DirectionalRecord b = make_record(90, 0, 270, 0, -88.0);
        const OmniSynthesisResult omni = synthesize_omni(std::vector{a, b});
        const double gain = directional_path_loss_db(a) - omni.omni_path_loss_db;
        CHECK(gain == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-9));
    }
    SUBCASE("a dominant beam carries the omni result")
    {
        // strongest beam holds 99% of the de-embedded power
        std::vector<DirectionalRecord> sweep;
        sweep.push_back(make_record(0, 0, 180, 0, mw_to_dbm(0.99e-9) + 54.0));
        for (int k = 0; k < 4; ++k)
            sweep.push_back(
                make_record(45.0 + 16.0 * k, 0, 200.0 + 16.0 * k, 0,
                            mw_to_dbm(0.0025e-9) + 54.0));
        const OmniSynthesisResult omni = synthesize_omni(sweep);
        const double dominant_pl = directional_path_loss_db(sweep.front());
        CHECK(omni.omni_path_loss_db <= dominant_pl);
        CHECK(std::abs(omni.omni_path_loss_db - dominant_pl) < 0.05);
    }
    SUBCASE("omni never loses to any contributing beam")
    {
        const std::uint64_t seed = 606;
        for (std::uint64_t trial = 0; trial < 100; ++trial)
        {
            std::vector<DirectionalRecord> sweep;
            const std::size_t beams = 1 + rng::word_at(seed, trial, 0) % 12;
            double min_pl = 1e9;
            for (std::size_t k = 0; k < beams; ++k)
            {
                const double az = 8.0 * static_cast<double>(
                                            (rng::word_at(seed, trial * 50 + k, 1) % 45));
                const double el = 0.0;
                const double pr = -95.0 + 35.0 * rng::uniform01_at(seed, trial * 50 + k, 2);
                DirectionalRecord r = make_record(az, el, 360.0 - az, el, pr);
                bool clash = false;
                for (const DirectionalRecord &prev : sweep)
                    if (prev.tx_pointing.azimuth_deg == r.tx_pointing.azimuth_deg)
                        clash = true;
                if (clash)
                    continue;
                min_pl = std::min(min_pl, directional_path_loss_db(r));
                sweep.push_back(std::move(r));
            }
            if (sweep.empty())
                continue;
            const OmniSynthesisResult omni = synthesize_omni(sweep);
            CHECK(omni.omni_path_loss_db <= min_pl + 1e-9);
        }
    }
    SUBCASE("same beam at a different elevation cut is deduplicated")
    {
        PowerDelayProfile pdp = make_pdp(std::vector<double>(20, 0.0));
        pdp.power_mw[7] = dbm_to_mw(-80.0);

        DirectionalRecord a = make_record(16, 0, 200, 0, -88.0);
        a.pdp = pdp;
        DirectionalRecord b = make_record(16, 8, 200, 0, -89.5); // uptilted re-measure
        b.pdp = pdp;

        const OmniSynthesisResult omni = synthesize_omni(std::vector{a, b});
        CHECK(omni.contributing_records == 1);
        CHECK(omni.deduplicated_records == 1);
        CHECK(omni.omni_path_loss_db ==
              doctest::Approx(directional_path_loss_db(a)).epsilon(1e-12));
    }
    SUBCASE("matching geometry with a different strongest delay is kept")
    {
        PowerDelayProfile pdp_a = make_pdp(std::vector<double>(20, 0.0));
        pdp_a.power_mw[7] = dbm_to_mw(-80.0);
        PowerDelayProfile pdp_b = make_pdp(std::vector<double>(20, 0.0));
        pdp_b.power_mw[12] = dbm_to_mw(-80.5); // different path set

        DirectionalRecord a = make_record(16, 0, 200, 0, -88.0);
        a.pdp = pdp_a;
        DirectionalRecord b = make_record(16, 8, 200, 0, -89.5);
        b.pdp = pdp_b;

        const OmniSynthesisResult omni = synthesize_omni(std::vector{a, b});
        CHECK(omni.contributing_records == 2);
        CHECK(omni.deduplicated_records == 0);
    }
    SUBCASE("exact duplicate pointing pairs are an error")
    {
        const DirectionalRecord a = make_record(16, 0, 200, 0, -88.0);
        const DirectionalRecord b = make_record(16, 0, 200, 0, -90.0);
        CHECK_THROWS_AS(synthesize_omni(std::vector{a, b}), Error);
    }
    SUBCASE("mixed links, frequencies or powers are errors")
    {
        DirectionalRecord a = make_record(0, 0, 180, 0, -88.0);
        DirectionalRecord b = make_record(90, 0, 270, 0, -88.0);
        b.rx_id = "RX9";
        CHECK_THROWS_AS(synthesize_omni(std::vector{a, b}), Error);
        b = make_record(90, 0, 270, 0, -88.0);
        b.freq_ghz = 73.0;
        CHECK_THROWS_AS(synthesize_omni(std::vector{a, b}), Error);
        b = make_record(90, 0, 270, 0, -88.0);
        b.tx_power_dbm = 5.0;
        CHECK_THROWS_AS(synthesize_omni(std::vector{a, b}), Error);
        CHECK_THROWS_AS(synthesize_omni({}), Error);
    }
}

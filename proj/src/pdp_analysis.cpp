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

#include "thzprop/pdp_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thzprop/errors.hpp"
#include "thzprop/units.hpp"

namespace thzprop
{

PowerDelayProfile threshold_pdp(const PowerDelayProfile &pdp, double snr_threshold_db)
{
    validate(pdp);
    if (snr_threshold_db < 0.0)
        throw Error("threshold_pdp: snr_threshold_db must be >= 0 dB");

    const double cut_mw = dbm_to_mw(pdp.noise_floor_dbm + snr_threshold_db);
    PowerDelayProfile out = pdp;
    for (double &p : out.power_mw)
        if (p < cut_mw)
            p = 0.0;
    return out;
}

PowerDelayProfile average_pdps(std::span<const PowerDelayProfile> pdps)
{
    if (pdps.empty())
        throw Error("average_pdps: no PDPs");
    const PowerDelayProfile &ref = pdps.front();
    validate(ref);
    for (std::size_t k = 1; k < pdps.size(); ++k)
    {
        const PowerDelayProfile &p = pdps[k];
        validate(p);
        if (p.bin_count() != ref.bin_count() ||
            std::abs(p.start_delay_ns - ref.start_delay_ns) > 1e-9 ||
            std::abs(p.bin_width_ns - ref.bin_width_ns) > 1e-9 ||
            std::abs(p.noise_floor_dbm - ref.noise_floor_dbm) > 1e-9)
            throw Error("average_pdps: PDP " + std::to_string(k + 1) +
                        " does not share the bin grid / noise floor");
    }

    PowerDelayProfile out = ref;
    for (std::size_t i = 0; i < out.power_mw.size(); ++i)
    {
        double sum = 0.0;
        for (const PowerDelayProfile &p : pdps)
            sum += p.power_mw[i];
        out.power_mw[i] = sum / static_cast<double>(pdps.size());
    }
    return out;
}

std::vector<MultipathComponent> extract_mpcs(const PowerDelayProfile &pdp)
{
    validate(pdp);
    const std::vector<double> &p = pdp.power_mw;
    const std::size_t n = p.size();

    std::vector<MultipathComponent> mpcs;
    std::size_t i = 0;
    while (i < n)
    {
        if (p[i] <= 0.0)
        {
            ++i;
            continue;
        }
        // Run of equal powers [i, j); a plateau resolves to its latest bin.
        std::size_t j = i + 1;
        while (j < n && p[j] == p[i])
            ++j;
        const bool rises_before = i == 0 || p[i - 1] < p[i];
        const bool falls_after = j == n || p[j] < p[i];
        if (rises_before && falls_after)
            mpcs.push_back({pdp.delay_at(j - 1), mw_to_dbm(p[i]), std::nullopt});
        i = j;
    }
    return mpcs;
}

std::vector<TimeCluster> partition_time_clusters(std::span<const MultipathComponent> mpcs,
                                                 double min_void_ns)
{
    if (min_void_ns < 0.0)
        throw Error("partition_time_clusters: min_void_ns must be >= 0");
    for (std::size_t i = 1; i < mpcs.size(); ++i)
        if (mpcs[i].delay_ns < mpcs[i - 1].delay_ns)
            throw Error("partition_time_clusters: MPCs must be sorted by delay");

    std::vector<TimeCluster> clusters;
    for (std::size_t i = 0; i < mpcs.size(); ++i)
    {
        const bool new_cluster =
            clusters.empty() ||
            mpcs[i].delay_ns - mpcs[i - 1].delay_ns > min_void_ns;
        if (new_cluster)
        {
            clusters.push_back(TimeCluster{});
            clusters.back().start_ns = mpcs[i].delay_ns;
        }
        clusters.back().mpc_indices.push_back(i);
        clusters.back().end_ns = mpcs[i].delay_ns;
    }
    return clusters;
}

double rms_delay_spread_ns(const PowerDelayProfile &pdp)
{
    validate(pdp);
    const double total = pdp.total_power_mw();
    if (!(total > 0.0))
        throw Error("rms_delay_spread_ns: PDP has zero total power");

    double mean = 0.0;
    for (std::size_t i = 0; i < pdp.power_mw.size(); ++i)
        mean += pdp.power_mw[i] * pdp.delay_at(i);
    mean /= total;

    // Two-pass central moment: same value as E[t^2] - E[t]^2 without the
    // cancellation at large absolute delays.
    double second = 0.0;
    for (std::size_t i = 0; i < pdp.power_mw.size(); ++i)
    {
        const double d = pdp.delay_at(i) - mean;
        second += pdp.power_mw[i] * d * d;
    }
    return std::sqrt(second / total);
}

double record_received_power_dbm(const DirectionalRecord &record, double snr_threshold_db)
{
    if (record.received_power_dbm)
        return *record.received_power_dbm;
    if (record.pdp)
    {
        const PowerDelayProfile cut = threshold_pdp(*record.pdp, snr_threshold_db);
        const double total = cut.total_power_mw();
        if (!(total > 0.0))
            throw Error("record " + record.tx_id + "-" + record.rx_id +
                        ": PDP carries no power above the threshold");
        return mw_to_dbm(total);
    }
    throw Error("record " + record.tx_id + "-" + record.rx_id +
                ": neither received_power_dbm nor a PDP is present");
}

double directional_path_loss_db(const DirectionalRecord &record, double snr_threshold_db)
{
    const double pr = record_received_power_dbm(record, snr_threshold_db);
    return record.tx_power_dbm + record.tx_gain_dbi + record.rx_gain_dbi - pr;
}

namespace
{

bool same_pointing(const PointingDirection &a, const PointingDirection &b)
{
    return a.azimuth_deg == b.azimuth_deg && a.elevation_deg == b.elevation_deg;
}

// Delay of the strongest bin of the thresholded PDP; ties go to the
// earliest bin. Absent when the record has no PDP.
std::optional<double> strongest_bin_delay_ns(const DirectionalRecord &r, double snr_db)
{
    if (!r.pdp)
        return std::nullopt;
    const PowerDelayProfile cut = threshold_pdp(*r.pdp, snr_db);
    std::size_t best = 0;
    for (std::size_t i = 1; i < cut.power_mw.size(); ++i)
        if (cut.power_mw[i] > cut.power_mw[best])
            best = i;
    if (cut.power_mw[best] <= 0.0)
        return std::nullopt;
    return cut.delay_at(best);
}

// Overlap rule for the synthesis: same beam set seen from an adjacent
// elevation cut, confirmed by a matching strongest-path delay.
bool overlapping_duplicate(const DirectionalRecord &candidate, const DirectionalRecord &kept,
                           std::optional<double> cand_delay, std::optional<double> kept_delay)
{
    const double hpbw = std::max(candidate.hpbw_deg, kept.hpbw_deg);
    if (angular_separation_deg(candidate.tx_pointing, kept.tx_pointing) > hpbw)
        return false;
    if (angular_separation_deg(candidate.rx_pointing, kept.rx_pointing) > hpbw)
        return false;
    const bool different_elevation_cut =
        candidate.tx_pointing.elevation_deg != kept.tx_pointing.elevation_deg ||
        candidate.rx_pointing.elevation_deg != kept.rx_pointing.elevation_deg;
    if (!different_elevation_cut)
        return false;
    if (!cand_delay || !kept_delay)
        return false;
    const double bin = std::max(candidate.pdp->bin_width_ns, kept.pdp->bin_width_ns);
    return std::abs(*cand_delay - *kept_delay) <= bin;
}

} // namespace

OmniSynthesisResult synthesize_omni(std::span<const DirectionalRecord> records,
                                    double snr_threshold_db)
{
    if (records.empty())
        throw Error("synthesize_omni: no records");

    const DirectionalRecord &first = records.front();
    for (const DirectionalRecord &r : records)
    {
        validate(r);
        if (r.tx_id != first.tx_id || r.rx_id != first.rx_id)
            throw Error("synthesize_omni: records mix TX-RX links (" + first.tx_id + "-" +
                        first.rx_id + " vs " + r.tx_id + "-" + r.rx_id + ")");
        if (r.freq_ghz != first.freq_ghz)
            throw Error("synthesize_omni: records mix frequencies");
        if (r.tx_power_dbm != first.tx_power_dbm)
            throw Error("synthesize_omni: records mix transmit powers");
    }

    for (std::size_t i = 0; i < records.size(); ++i)
        for (std::size_t j = i + 1; j < records.size(); ++j)
            if (same_pointing(records[i].tx_pointing, records[j].tx_pointing) &&
                same_pointing(records[i].rx_pointing, records[j].rx_pointing))
                throw Error("synthesize_omni: records " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) +
                            " share the exact pointing pair; pre-average repeated beams");

    std::vector<std::size_t> kept;
    std::vector<std::optional<double>> kept_delay;
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < records.size(); ++i)
    {
        const auto delay = strongest_bin_delay_ns(records[i], snr_threshold_db);
        bool duplicate = false;
        for (std::size_t k = 0; k < kept.size() && !duplicate; ++k)
            duplicate = overlapping_duplicate(records[i], records[kept[k]], delay,
                                              kept_delay[k]);
        if (duplicate)
        {
            ++dropped;
            continue;
        }
        kept.push_back(i);
        kept_delay.push_back(delay);
    }

    double total_mw = 0.0;
    for (const std::size_t i : kept)
    {
        const DirectionalRecord &r = records[i];
        const double pr = record_received_power_dbm(r, snr_threshold_db);
        total_mw += dbm_to_mw(pr - r.tx_gain_dbi - r.rx_gain_dbi);
    }

    OmniSynthesisResult result;
    result.omni_received_power_dbm = mw_to_dbm(total_mw);
    result.omni_path_loss_db = first.tx_power_dbm - result.omni_received_power_dbm;
    result.contributing_records = kept.size();
    result.deduplicated_records = dropped;
    return result;
}

} // namespace thzprop

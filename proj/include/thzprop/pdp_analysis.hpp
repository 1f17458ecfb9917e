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

#ifndef THZPROP_PDP_ANALYSIS_HPP
#define THZPROP_PDP_ANALYSIS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "thzprop/channel_data.hpp"

// PDP conditioning, multipath extraction, time-cluster partitioning, RMS
// delay spread, and omnidirectional synthesis from directional sweeps.

namespace thzprop
{

/// Default SNR threshold above the noise floor for keeping a bin.
inline constexpr double kDefaultSnrThresholdDb = 5.0;

/// Minimum inter-cluster void interval. Conventional time-cluster value;
/// configurable because it is a partitioning choice, not a measurement.
inline constexpr double kDefaultMinVoidNs = 25.0;

/// Group of MPCs adjacent in delay. Indices refer to the MPC list the
/// cluster was built from and are contiguous in delay order.
struct TimeCluster
{
    std::vector<std::size_t> mpc_indices;
    double start_ns = 0.0;
    double end_ns = 0.0;
};

struct OmniSynthesisResult
{
    /// Power an isotropic RX would capture (antenna gains de-embedded).
    double omni_received_power_dbm = 0.0;
    double omni_path_loss_db = 0.0;
    std::size_t contributing_records = 0;
    std::size_t deduplicated_records = 0;
};

/// Zeroes every bin whose power lies below noise_floor_dbm + snr_threshold_db.
/// Metadata is unchanged and the operation is idempotent.
PowerDelayProfile threshold_pdp(const PowerDelayProfile &pdp, double snr_threshold_db);

/// Per-bin arithmetic mean of linear powers. All PDPs must share the bin
/// grid and noise floor.
PowerDelayProfile average_pdps(std::span<const PowerDelayProfile> pdps);

/// One MPC per strict local maximum above zero power, ordered by delay.
/// Plateaus resolve to their latest bin; array boundaries are eligible.
/// Expects an already-thresholded PDP.
std::vector<MultipathComponent> extract_mpcs(const PowerDelayProfile &pdp);

/// Splits delay-sorted MPCs into clusters: a gap greater than min_void_ns
/// between consecutive MPCs starts a new cluster.
std::vector<TimeCluster> partition_time_clusters(std::span<const MultipathComponent> mpcs,
                                                 double min_void_ns = kDefaultMinVoidNs);

/// Power-weighted RMS spread of the delay distribution:
/// sqrt(sum(p t^2)/sum(p) - (sum(p t)/sum(p))^2), evaluated in the
/// numerically stable two-pass central form. Errors on zero total power.
double rms_delay_spread_ns(const PowerDelayProfile &pdp);

/// Received power of a record: the stored value if present, otherwise the
/// total power of its PDP after thresholding. Errors when neither exists.
double record_received_power_dbm(const DirectionalRecord &record,
                                 double snr_threshold_db = kDefaultSnrThresholdDb);

/// PL = tx_power + tx_gain + rx_gain - received_power (gains de-embedded).
double directional_path_loss_db(const DirectionalRecord &record,
                                double snr_threshold_db = kDefaultSnrThresholdDb);

/// Sums linear received powers over unique (non-overlapping) pointing
/// combinations for one TX-RX link. All records must share tx/rx ids,
/// frequency and transmit power.
///
/// De-duplication: a record is dropped when both its TX and RX pointings
/// fall within one HPBW of an already-counted record at a different
/// elevation cut AND both records' strongest PDP bins match within one bin
/// width. Records measured at exactly the same pointing pair are an error
/// (same beam twice must be pre-averaged).
OmniSynthesisResult synthesize_omni(std::span<const DirectionalRecord> records,
                                    double snr_threshold_db = kDefaultSnrThresholdDb);

} // namespace thzprop

#endif

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thzprop/channel_data.hpp"
#include "thzprop/coverage.hpp"
#include "thzprop/errors.hpp"
#include "thzprop/linkbudget.hpp"
#include "thzprop/pathloss.hpp"
#include "thzprop/pdp_analysis.hpp"
#include "thzprop/plfit.hpp"

namespace py = pybind11;
using namespace thzprop;

PYBIND11_MODULE(thzprop, m)
{
    m.doc() = "Sub-THz urban microcell propagation models, PDP analysis, and link budgets";

    py::register_exception<Error>(m, "Error");

    // ---- channel data -----------------------------------------------------

    py::enum_<Scenario>(m, "Scenario")
        .value("LOS", Scenario::LOS)
        .value("NLOS", Scenario::NLOS);

    py::class_<PointingDirection>(m, "PointingDirection")
        .def(py::init<>())
        .def(py::init(&make_pointing), py::arg("azimuth_deg"), py::arg("elevation_deg"))
        .def_readwrite("azimuth_deg", &PointingDirection::azimuth_deg)
        .def_readwrite("elevation_deg", &PointingDirection::elevation_deg);

    m.def("make_pointing", &make_pointing, py::arg("azimuth_deg"), py::arg("elevation_deg"));
    m.def("angular_separation_deg", &angular_separation_deg);

    py::class_<PowerDelayProfile>(m, "PowerDelayProfile")
        .def(py::init<>())
        .def_readwrite("start_delay_ns", &PowerDelayProfile::start_delay_ns)
        .def_readwrite("bin_width_ns", &PowerDelayProfile::bin_width_ns)
        .def_readwrite("power_mw", &PowerDelayProfile::power_mw)
        .def_readwrite("noise_floor_dbm", &PowerDelayProfile::noise_floor_dbm)
        .def("bin_count", &PowerDelayProfile::bin_count)
        .def("delay_at", &PowerDelayProfile::delay_at)
        .def("total_power_mw", &PowerDelayProfile::total_power_mw);

    py::class_<MultipathComponent>(m, "MultipathComponent")
        .def(py::init<>())
        .def_readwrite("delay_ns", &MultipathComponent::delay_ns)
        .def_readwrite("power_dbm", &MultipathComponent::power_dbm)
        .def_readwrite("direction", &MultipathComponent::direction);

    py::class_<DirectionalRecord>(m, "DirectionalRecord")
        .def(py::init<>())
        .def_readwrite("tx_id", &DirectionalRecord::tx_id)
        .def_readwrite("rx_id", &DirectionalRecord::rx_id)
        .def_readwrite("distance_3d_m", &DirectionalRecord::distance_3d_m)
        .def_readwrite("scenario", &DirectionalRecord::scenario)
        .def_readwrite("tx_pointing", &DirectionalRecord::tx_pointing)
        .def_readwrite("rx_pointing", &DirectionalRecord::rx_pointing)
        .def_readwrite("freq_ghz", &DirectionalRecord::freq_ghz)
        .def_readwrite("tx_power_dbm", &DirectionalRecord::tx_power_dbm)
        .def_readwrite("tx_gain_dbi", &DirectionalRecord::tx_gain_dbi)
        .def_readwrite("rx_gain_dbi", &DirectionalRecord::rx_gain_dbi)
        .def_readwrite("hpbw_deg", &DirectionalRecord::hpbw_deg)
        .def_readwrite("received_power_dbm", &DirectionalRecord::received_power_dbm)
        .def_readwrite("pdp", &DirectionalRecord::pdp);

    py::class_<MeasurementSet>(m, "MeasurementSet")
        .def(py::init<>())
        .def_readwrite("records", &MeasurementSet::records)
        .def_readwrite("campaign_label", &MeasurementSet::campaign_label);

    m.def(
        "parse_measurement_csv",
        [](const std::string &text, bool allow_missing_power) {
            CsvParseOptions opts;
            opts.allow_missing_power = allow_missing_power;
            return parse_measurement_csv(std::string_view(text), opts);
        },
        py::arg("text"), py::arg("allow_missing_power") = false);
    m.def("to_csv", &to_csv);
    m.def("parse_pdp_file",
          [](const std::string &text) { return parse_pdp_file(std::string_view(text)); });
    m.def("to_pdp_file", &to_pdp_file);

    // ---- path loss models --------------------------------------------------

    py::enum_<AntennaMode>(m, "AntennaMode")
        .value("Directional", AntennaMode::Directional)
        .value("Omnidirectional", AntennaMode::Omnidirectional);

    py::enum_<BeamSelection>(m, "BeamSelection")
        .value("Best", BeamSelection::Best)
        .value("Arbitrary", BeamSelection::Arbitrary)
        .value("NotApplicable", BeamSelection::NotApplicable);

    py::class_<CiModelParams>(m, "CiModelParams")
        .def(py::init<>())
        .def_readwrite("freq_ghz", &CiModelParams::freq_ghz)
        .def_readwrite("ple_n", &CiModelParams::ple_n)
        .def_readwrite("sigma_db", &CiModelParams::sigma_db)
        .def_readwrite("scenario", &CiModelParams::scenario)
        .def_readwrite("antenna_mode", &CiModelParams::antenna_mode)
        .def_readwrite("beam_selection", &CiModelParams::beam_selection)
        .def_readwrite("censored_fit", &CiModelParams::censored_fit);

    m.def("fspl_db", &fspl_db, py::arg("freq_ghz"), py::arg("distance_m"));
    m.def("ci_path_loss_db", &ci_path_loss_db, py::arg("params"), py::arg("distance_m"),
          py::arg("shadow_db") = 0.0);
    m.def("registry_entries", [] {
        const auto entries = registry_entries();
        return std::vector<CiModelParams>(entries.begin(), entries.end());
    });
    m.def(
        "registry_lookup",
        [](double freq_ghz, Scenario sc, AntennaMode mode, BeamSelection beam) {
            return registry_lookup(freq_ghz, sc, mode, beam);
        },
        py::arg("freq_ghz"), py::arg("scenario"), py::arg("antenna_mode"),
        py::arg("beam_selection") = BeamSelection::NotApplicable);

    // ---- PLE fitting -------------------------------------------------------

    py::class_<PathLossSample>(m, "PathLossSample")
        .def(py::init<>())
        .def(py::init([](double d, double pl, bool censored) {
                 return PathLossSample{d, pl, censored};
             }),
             py::arg("distance_m"), py::arg("path_loss_db"), py::arg("censored") = false)
        .def_readwrite("distance_m", &PathLossSample::distance_m)
        .def_readwrite("path_loss_db", &PathLossSample::path_loss_db)
        .def_readwrite("censored", &PathLossSample::censored);

    py::class_<CiFitResult>(m, "CiFitResult")
        .def_readonly("ple_n", &CiFitResult::ple_n)
        .def_readonly("sigma_db", &CiFitResult::sigma_db)
        .def_readonly("sample_count", &CiFitResult::sample_count)
        .def_readonly("censored_count", &CiFitResult::censored_count)
        .def_readonly("censoring_warning", &CiFitResult::censoring_warning);

    m.def(
        "fit_ci_mmse",
        [](const std::vector<PathLossSample> &samples, double freq_ghz) {
            return fit_ci_mmse(samples, freq_ghz);
        },
        py::arg("samples"), py::arg("freq_ghz"));
    m.def(
        "fit_with_censoring_report",
        [](const std::vector<PathLossSample> &samples, double freq_ghz, double max_pl) {
            return fit_with_censoring_report(samples, freq_ghz, max_pl);
        },
        py::arg("samples"), py::arg("freq_ghz"), py::arg("max_measurable_pl_db"));

    // ---- PDP analysis ------------------------------------------------------

    py::class_<TimeCluster>(m, "TimeCluster")
        .def_readonly("mpc_indices", &TimeCluster::mpc_indices)
        .def_readonly("start_ns", &TimeCluster::start_ns)
        .def_readonly("end_ns", &TimeCluster::end_ns);

    py::class_<OmniSynthesisResult>(m, "OmniSynthesisResult")
        .def_readonly("omni_received_power_dbm",
                      &OmniSynthesisResult::omni_received_power_dbm)
        .def_readonly("omni_path_loss_db", &OmniSynthesisResult::omni_path_loss_db)
        .def_readonly("contributing_records", &OmniSynthesisResult::contributing_records)
        .def_readonly("deduplicated_records", &OmniSynthesisResult::deduplicated_records);

    m.def("threshold_pdp", &threshold_pdp, py::arg("pdp"), py::arg("snr_threshold_db"));
    m.def("average_pdps", [](const std::vector<PowerDelayProfile> &pdps) {
        return average_pdps(pdps);
    });
    m.def("extract_mpcs", &extract_mpcs);
    m.def(
        "partition_time_clusters",
        [](const std::vector<MultipathComponent> &mpcs, double min_void_ns) {
            return partition_time_clusters(mpcs, min_void_ns);
        },
        py::arg("mpcs"), py::arg("min_void_ns") = kDefaultMinVoidNs);
    m.def("rms_delay_spread_ns", &rms_delay_spread_ns);
    m.def("record_received_power_dbm", &record_received_power_dbm, py::arg("record"),
          py::arg("snr_threshold_db") = kDefaultSnrThresholdDb);
    m.def("directional_path_loss_db", &directional_path_loss_db, py::arg("record"),
          py::arg("snr_threshold_db") = kDefaultSnrThresholdDb);
    m.def(
        "synthesize_omni",
        [](const std::vector<DirectionalRecord> &records, double snr_threshold_db) {
            return synthesize_omni(records, snr_threshold_db);
        },
        py::arg("records"), py::arg("snr_threshold_db") = kDefaultSnrThresholdDb);

    // ---- link budgets & geometry -------------------------------------------

    py::class_<LinkBudget>(m, "LinkBudget")
        .def(py::init<>())
        .def_readwrite("tx_power_dbm", &LinkBudget::tx_power_dbm)
        .def_readwrite("tx_gain_dbi", &LinkBudget::tx_gain_dbi)
        .def_readwrite("rx_gain_dbi", &LinkBudget::rx_gain_dbi)
        .def_readwrite("freq_ghz", &LinkBudget::freq_ghz)
        .def_readwrite("max_measurable_pl_db", &LinkBudget::max_measurable_pl_db)
        .def_readwrite("snr_threshold_db", &LinkBudget::snr_threshold_db)
        .def("eirp_dbm", &LinkBudget::eirp_dbm)
        .def("with_eirp", &LinkBudget::with_eirp, py::arg("eirp_dbm"));

    py::class_<FoliageModel>(m, "FoliageModel")
        .def(py::init<>())
        .def_static("for_band", &FoliageModel::for_band, py::arg("freq_ghz"))
        .def_readwrite("canopy_depth_m", &FoliageModel::canopy_depth_m)
        .def_readwrite("attenuation_rate_db_per_m", &FoliageModel::attenuation_rate_db_per_m)
        .def_readwrite("statistical_mean_db", &FoliageModel::statistical_mean_db)
        .def_readwrite("statistical_sd_db", &FoliageModel::statistical_sd_db);

    py::class_<RooftopGeometry>(m, "RooftopGeometry")
        .def(py::init<>())
        .def_readwrite("rx_height_m", &RooftopGeometry::rx_height_m)
        .def_readwrite("tx_height_m", &RooftopGeometry::tx_height_m)
        .def_readwrite("boresight_elevation_deg", &RooftopGeometry::boresight_elevation_deg)
        .def_readwrite("slant_distance_m", &RooftopGeometry::slant_distance_m);

    py::class_<ElevationGeometry>(m, "ElevationGeometry")
        .def_readonly("elevation_deg", &ElevationGeometry::elevation_deg)
        .def_readonly("slant_distance_m", &ElevationGeometry::slant_distance_m);

    m.def("received_power_fs_dbm", &received_power_fs_dbm, py::arg("budget"),
          py::arg("distance_m"));
    m.def("foliage_slant_length_m", &foliage_slant_length_m, py::arg("elevation_deg"),
          py::arg("canopy_depth_m"));
    m.def("foliage_loss_db", &foliage_loss_db, py::arg("model"), py::arg("slant_length_m"));
    m.def("sample_foliage_loss_db", &sample_foliage_loss_db, py::arg("model"),
          py::arg("seed"), py::arg("index") = 0);
    m.def("predict_received_power_foliage_dbm", &predict_received_power_foliage_dbm,
          py::arg("budget"), py::arg("distance_m"), py::arg("elevation_deg"),
          py::arg("model"));
    m.def("detectable", &detectable, py::arg("budget"), py::arg("path_loss_db"));
    m.def("elevation_from_geometry", &elevation_from_geometry, py::arg("rx_height_m"),
          py::arg("tx_height_m"), py::arg("ground_distance_m"));

    // ---- coverage ------------------------------------------------------------

    py::class_<OutageQuery>(m, "OutageQuery")
        .def(py::init<>())
        .def_readwrite("params", &OutageQuery::params)
        .def_readwrite("budget", &OutageQuery::budget)
        .def_readwrite("distance_m", &OutageQuery::distance_m)
        .def_readwrite("sample_count", &OutageQuery::sample_count)
        .def_readwrite("seed", &OutageQuery::seed);

    py::class_<OutageResult>(m, "OutageResult")
        .def_readonly("outage_probability", &OutageResult::outage_probability)
        .def_readonly("analytic_probability", &OutageResult::analytic_probability)
        .def_readonly("samples", &OutageResult::samples)
        .def_readonly("max_range_m", &OutageResult::max_range_m);

    py::class_<BandComparison>(m, "BandComparison")
        .def_readonly("freq_ghz", &BandComparison::freq_ghz)
        .def_readonly("path_loss_db", &BandComparison::path_loss_db)
        .def_readonly("outage_analytic", &BandComparison::outage_analytic);

    py::class_<BandComparisonRow>(m, "BandComparisonRow")
        .def_readonly("distance_m", &BandComparisonRow::distance_m)
        .def_readonly("bands", &BandComparisonRow::bands);

    m.def("gaussian_tail", &gaussian_tail);
    m.def("analytic_outage_probability", &analytic_outage_probability, py::arg("params"),
          py::arg("budget"), py::arg("distance_m"));
    m.def("outage_probability_mc", &outage_probability_mc, py::arg("query"),
          py::arg("workers") = 1);
    m.def("max_range_m", &max_range_m, py::arg("params"), py::arg("budget"),
          py::arg("outage_target"));
    m.def(
        "compare_bands",
        [](Scenario sc, AntennaMode mode, BeamSelection beam, const LinkBudget &budget,
           const std::vector<double> &distances) {
            return compare_bands(sc, mode, beam, budget, distances);
        },
        py::arg("scenario"), py::arg("antenna_mode"), py::arg("beam_selection"),
        py::arg("budget"), py::arg("distances"));
}

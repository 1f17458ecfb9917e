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

// Command-line front end: ingestion, fitting, omni synthesis, link budgets,
// and coverage wired into reproducible batch runs. Same inputs and seed give
// byte-identical outputs; files are written atomically (temp + rename).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "thzprop/channel_data.hpp"
#include "thzprop/coverage.hpp"
#include "thzprop/errors.hpp"
#include "thzprop/linkbudget.hpp"
#include "thzprop/pathloss.hpp"
#include "thzprop/pdp_analysis.hpp"
#include "thzprop/plfit.hpp"

namespace
{

using nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------- formatting

std::string fmt_fixed(double value, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    std::string s = buf;
    // "-0.00" and friends collapse to the unsigned form
    if (!s.empty() && s.front() == '-' &&
        s.find_first_not_of("0.", 1) == std::string::npos)
        s.erase(0, 1);
    return s;
}

std::string fmt_shortest(double value)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string one_line(std::string text)
{
    std::replace(text.begin(), text.end(), '\n', ';');
    std::replace(text.begin(), text.end(), '\r', ' ');
    return text;
}

// ------------------------------------------------------------------- output

void write_output(const std::string &path, const std::string &content)
{
    if (path.empty())
    {
        std::cout << content;
        return;
    }
    const fs::path target(path);
    fs::path tmp(path + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw thzprop::Error("cannot open output file " + tmp.string());
        out << content;
        out.flush();
        if (!out)
        {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw thzprop::Error("failed while writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec)
    {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw thzprop::Error("cannot move output into place at " + target.string() + ": " +
                             ec.message());
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw thzprop::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ------------------------------------------------------------- JSON configs

// Config-file support for subcommand flags: a flat JSON object whose keys
// are long option names. Command-line flags win over file values.
class JsonConfig : public CLI::Config
{
  public:
    std::string to_config(const CLI::App *, bool, bool, std::string) const override
    {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override
    {
        json root;
        try
        {
            root = json::parse(input);
        }
        catch (const json::exception &e)
        {
            throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!root.is_object())
            throw CLI::FileError("config must be a JSON object of flag: value pairs");

        std::vector<CLI::ConfigItem> items;
        for (const auto &[key, value] : root.items())
        {
            CLI::ConfigItem item;
            item.name = key;
            if (value.is_array())
                for (const auto &element : value)
                    item.inputs.push_back(scalar_to_string(element));
            else
                item.inputs.push_back(scalar_to_string(value));
            items.push_back(std::move(item));
        }
        return items;
    }

  private:
    static std::string scalar_to_string(const json &value)
    {
        if (value.is_string())
            return value.get<std::string>();
        if (value.is_boolean())
            return value.get<bool>() ? "true" : "false";
        return value.dump();
    }
};

void enable_json_config(CLI::App *sub)
{
    sub->config_formatter(std::make_shared<JsonConfig>());
    sub->set_config("--config", "", "JSON config file with flag values (flags win)");
}

// ------------------------------------------------------------- shared flags

struct CommonOpts
{
    std::string out_path;
    int precision = 2;
};

void add_common(CLI::App *sub, CommonOpts &opts)
{
    sub->add_option("--out", opts.out_path, "Output file (stdout when omitted)");
    sub->add_option("--precision", opts.precision, "Fixed decimals for dB / meter values")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
}

double require_double(const json &obj, const char *key, const std::string &ctx)
{
    if (!obj.contains(key) || !obj[key].is_number())
        throw thzprop::Error(ctx + ": missing numeric field '" + key + "'");
    return obj[key].get<double>();
}

// ------------------------------------------------------------- subcommands

void run_registry(const std::optional<double> &band, const CommonOpts &opts)
{
    std::string out = "freq_ghz,scenario,antenna_mode,beam_selection,ple_n,sigma_db,censored\n";
    bool any = false;
    for (const thzprop::CiModelParams &p : thzprop::registry_entries())
    {
        if (band && p.freq_ghz != *band)
            continue;
        any = true;
        out += fmt_shortest(p.freq_ghz) + ',' + thzprop::to_string(p.scenario) + ',' +
               thzprop::to_string(p.antenna_mode) + ',' +
               thzprop::to_string(p.beam_selection) + ',';
        out += fmt_fixed(p.ple_n, opts.precision) + ',';
        if (p.sigma_db)
            out += fmt_fixed(*p.sigma_db, opts.precision);
        out += ',';
        out += p.censored_fit ? "true" : "false";
        out += '\n';
    }
    if (!any)
        throw thzprop::Error("no registry entries for band " + fmt_shortest(*band) +
                             " (built-in bands: 142, 73, 28)");
    write_output(opts.out_path, out);
}

struct ModelKeyOpts
{
    double band = 142.0;
    std::string scenario = "los";
    std::string mode = "omni";
    std::string beam = "na";

    const thzprop::CiModelParams &lookup() const
    {
        return thzprop::registry_lookup(band, thzprop::scenario_from_string(scenario),
                                        thzprop::antenna_mode_from_string(mode),
                                        thzprop::beam_selection_from_string(beam));
    }
};

void add_model_key(CLI::App *sub, ModelKeyOpts &opts, bool required)
{
    auto *band = sub->add_option("--band", opts.band, "Carrier frequency in GHz (142|73|28)");
    auto *scenario = sub->add_option("--scenario", opts.scenario, "los|nlos")
                         ->check(CLI::IsMember({"los", "nlos"}, CLI::ignore_case));
    auto *mode = sub->add_option("--mode", opts.mode, "directional|omni")
                     ->check(CLI::IsMember({"dir", "directional", "omni", "omnidirectional"},
                                           CLI::ignore_case));
    sub->add_option("--beam", opts.beam, "best|arbitrary|na (directional NLOS only)")
        ->check(CLI::IsMember({"best", "arbitrary", "na"}, CLI::ignore_case))
        ->capture_default_str();
    if (required)
    {
        band->required();
        scenario->required();
        mode->required();
    }
}

void run_predict(const ModelKeyOpts &key, const std::vector<double> &distances,
                 const CommonOpts &opts)
{
    const thzprop::CiModelParams &params = key.lookup();
    std::string out = "distance_m,path_loss_db\n";
    for (const double d : distances)
        out += fmt_fixed(d, opts.precision) + ',' +
               fmt_fixed(thzprop::ci_path_loss_db(params, d, 0.0), opts.precision) + '\n';
    write_output(opts.out_path, out);
}

void run_fit(const std::string &input, const std::optional<double> &max_pl,
             const CommonOpts &opts)
{
    std::ifstream in(input, std::ios::binary);
    if (!in)
        throw thzprop::Error("cannot open " + input);
    const thzprop::MeasurementSet set = thzprop::parse_measurement_csv(in);
    if (set.records.empty())
        throw thzprop::Error("no measurement rows in " + input);

    std::map<thzprop::Scenario, std::vector<thzprop::PathLossSample>> groups;
    for (const thzprop::DirectionalRecord &r : set.records)
        groups[r.scenario].push_back(
            {r.distance_3d_m, thzprop::directional_path_loss_db(r), false});

    const double freq = set.records.front().freq_ghz;
    std::string out = "freq_ghz,scenario,antenna_mode,ple_n,sigma_db,sample_count,"
                      "censored_count,censoring_warning\n";
    for (const thzprop::Scenario sc : {thzprop::Scenario::LOS, thzprop::Scenario::NLOS})
    {
        const auto it = groups.find(sc);
        if (it == groups.end())
            continue;
        const thzprop::CiFitResult fit =
            max_pl ? thzprop::fit_with_censoring_report(it->second, freq, *max_pl)
                   : thzprop::fit_ci_mmse(it->second, freq);
        out += fmt_shortest(freq) + ',' + thzprop::to_string(sc) + ",directional,";
        out += fmt_fixed(fit.ple_n, opts.precision) + ',' +
               fmt_fixed(fit.sigma_db, opts.precision) + ',';
        out += std::to_string(fit.sample_count) + ',' + std::to_string(fit.censored_count) +
               ',';
        out += fit.censoring_warning ? "true" : "false";
        out += '\n';
    }
    write_output(opts.out_path, out);
}

void run_synth(const std::string &input, const std::string &pdp_dir, double snr_threshold_db,
               const CommonOpts &opts)
{
    std::ifstream in(input, std::ios::binary);
    if (!in)
        throw thzprop::Error("cannot open " + input);

    thzprop::CsvParseOptions parse_opts;
    parse_opts.allow_missing_power = !pdp_dir.empty();
    thzprop::MeasurementSet set = thzprop::parse_measurement_csv(in, parse_opts);

    if (!pdp_dir.empty())
    {
        // Row k of the CSV (1-based) pairs with <pdp-dir>/row<k>.pdp.
        for (std::size_t k = 0; k < set.records.size(); ++k)
        {
            const fs::path pdp_path = fs::path(pdp_dir) / ("row" + std::to_string(k + 1) +
                                                           ".pdp");
            if (fs::exists(pdp_path))
                set.records[k].pdp = thzprop::parse_pdp_file(read_file(pdp_path.string()));
        }
    }
    thzprop::validate(set);

    std::map<std::pair<std::string, std::string>, std::vector<thzprop::DirectionalRecord>>
        links;
    for (const thzprop::DirectionalRecord &r : set.records)
        links[{r.tx_id, r.rx_id}].push_back(r);

    std::string out = "# dedup=overlap-within-hpbw-and-matching-strongest-delay\n";
    out += "tx_id,rx_id,omni_path_loss_db,contributing,deduplicated\n";
    for (const auto &[key, records] : links)
    {
        const thzprop::OmniSynthesisResult r =
            thzprop::synthesize_omni(records, snr_threshold_db);
        out += key.first + ',' + key.second + ',';
        out += fmt_fixed(r.omni_path_loss_db, opts.precision) + ',';
        out += std::to_string(r.contributing_records) + ',' +
               std::to_string(r.deduplicated_records) + '\n';
    }
    write_output(opts.out_path, out);
}

void run_rooftop(const std::string &config_path, const CommonOpts &opts)
{
    json root;
    try
    {
        root = json::parse(read_file(config_path));
    }
    catch (const json::exception &e)
    {
        throw thzprop::Error("rooftop config is not valid JSON: " + one_line(e.what()));
    }

    thzprop::LinkBudget budget;
    if (root.contains("budget"))
    {
        const json &b = root["budget"];
        budget.tx_power_dbm = b.value("tx_power_dbm", budget.tx_power_dbm);
        budget.tx_gain_dbi = b.value("tx_gain_dbi", budget.tx_gain_dbi);
        budget.rx_gain_dbi = b.value("rx_gain_dbi", budget.rx_gain_dbi);
        budget.freq_ghz = b.value("freq_ghz", budget.freq_ghz);
        budget.max_measurable_pl_db = b.value("max_measurable_pl_db",
                                              budget.max_measurable_pl_db);
        budget.snr_threshold_db = b.value("snr_threshold_db", budget.snr_threshold_db);
    }
    thzprop::validate(budget);

    thzprop::FoliageModel foliage;
    if (root.contains("foliage"))
    {
        const json &f = root["foliage"];
        foliage.canopy_depth_m = f.value("canopy_depth_m", foliage.canopy_depth_m);
        foliage.attenuation_rate_db_per_m =
            f.value("attenuation_rate_db_per_m", foliage.attenuation_rate_db_per_m);
        foliage.statistical_mean_db = f.value("statistical_mean_db",
                                              foliage.statistical_mean_db);
        foliage.statistical_sd_db = f.value("statistical_sd_db", foliage.statistical_sd_db);
    }
    thzprop::validate(foliage);

    if (!root.contains("links") || !root["links"].is_array() || root["links"].empty())
        throw thzprop::Error("rooftop config: 'links' must be a non-empty array");

    std::string out = "label,distance_m,elevation_deg,pr_fs_dbm,pr_predicted_dbm,"
                      "pr_measured_dbm,foliage_loss_db\n";
    for (const json &link : root["links"])
    {
        const std::string label = link.value("label", std::string("link"));
        const double distance = require_double(link, "distance_m", "link '" + label + "'");
        const double elevation = require_double(link, "elevation_deg",
                                                "link '" + label + "'");
        const bool blocked = link.value("foliage_blocked", true);

        const double pr_fs = thzprop::received_power_fs_dbm(budget, distance);
        const double pr_predicted =
            blocked ? thzprop::predict_received_power_foliage_dbm(budget, distance, elevation,
                                                                  foliage)
                    : pr_fs;

        out += label + ',' + fmt_fixed(distance, opts.precision) + ',' +
               fmt_fixed(elevation, opts.precision) + ',';
        out += fmt_fixed(pr_fs, opts.precision) + ',' +
               fmt_fixed(pr_predicted, opts.precision) + ',';
        if (link.contains("measured_power_dbm"))
        {
            const double measured = link["measured_power_dbm"].get<double>();
            out += fmt_fixed(measured, opts.precision) + ',' +
                   fmt_fixed(pr_fs - measured, opts.precision);
        }
        else
        {
            out += ",";
        }
        out += '\n';
    }
    write_output(opts.out_path, out);
}

void run_foliage(const std::vector<double> &elevations, double depth, double rate,
                 bool statistical, std::uint64_t seed, const CommonOpts &opts)
{
    thzprop::FoliageModel model;
    model.canopy_depth_m = depth;
    model.attenuation_rate_db_per_m = rate;

    std::string out = statistical
                          ? "elevation_deg,slant_length_m,foliage_loss_db,sampled_loss_db\n"
                          : "elevation_deg,slant_length_m,foliage_loss_db\n";
    for (std::size_t i = 0; i < elevations.size(); ++i)
    {
        const double slant = thzprop::foliage_slant_length_m(elevations[i], depth);
        out += fmt_fixed(elevations[i], opts.precision) + ',' +
               fmt_fixed(slant, opts.precision) + ',' +
               fmt_fixed(thzprop::foliage_loss_db(model, slant), opts.precision);
        if (statistical)
            out += ',' + fmt_fixed(thzprop::sample_foliage_loss_db(model, seed, i),
                                   opts.precision);
        out += '\n';
    }
    write_output(opts.out_path, out);
}

struct CoverageOpts
{
    ModelKeyOpts key;
    std::vector<double> distances;
    double dmin = 0.0, dmax = 0.0, step = 0.0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::optional<double> eirp_dbm;
    std::optional<double> max_pl;
    bool compare = false;
};

std::vector<double> coverage_distances(const CoverageOpts &cov)
{
    if (!cov.distances.empty())
        return cov.distances;
    if (!(cov.step > 0.0) || !(cov.dmax >= cov.dmin) || !(cov.dmin >= 1.0))
        throw thzprop::Error("coverage: give --d or a valid --dmin/--dmax/--step sweep");
    std::vector<double> out;
    for (double d = cov.dmin; d <= cov.dmax + 1e-9; d += cov.step)
        out.push_back(d);
    return out;
}

void run_coverage(const CoverageOpts &cov, const CommonOpts &opts)
{
    thzprop::LinkBudget budget;
    budget.freq_ghz = cov.key.band;
    if (cov.eirp_dbm)
        budget = budget.with_eirp(*cov.eirp_dbm);
    if (cov.max_pl)
        budget.max_measurable_pl_db = *cov.max_pl;

    const std::vector<double> distances = coverage_distances(cov);
    const int prob_precision = opts.precision + 4;

    if (cov.compare)
    {
        const auto rows = thzprop::compare_bands(
            thzprop::scenario_from_string(cov.key.scenario),
            thzprop::antenna_mode_from_string(cov.key.mode),
            thzprop::beam_selection_from_string(cov.key.beam), budget, distances);
        std::string out = "distance_m,pl_28_db,outage_28,pl_73_db,outage_73,"
                          "pl_142_db,outage_142\n";
        for (const thzprop::BandComparisonRow &row : rows)
        {
            out += fmt_fixed(row.distance_m, opts.precision);
            for (const thzprop::BandComparison &band : row.bands)
            {
                out += ',' + fmt_fixed(band.path_loss_db, opts.precision) + ',';
                if (band.outage_analytic)
                    out += fmt_fixed(*band.outage_analytic, prob_precision);
            }
            out += '\n';
        }
        write_output(opts.out_path, out);
        return;
    }

    const thzprop::CiModelParams &params = cov.key.lookup();
    std::string out = "distance_m,pl_db,outage_mc,outage_analytic\n";
    for (const double d : distances)
    {
        thzprop::OutageQuery query;
        query.params = params;
        query.budget = budget;
        query.distance_m = d;
        query.sample_count = cov.samples;
        query.seed = cov.seed;
        const thzprop::OutageResult r = thzprop::outage_probability_mc(query, cov.workers);
        out += fmt_fixed(d, opts.precision) + ',' +
               fmt_fixed(thzprop::ci_path_loss_db(params, d, 0.0), opts.precision) + ',';
        out += fmt_fixed(r.outage_probability, prob_precision) + ',' +
               fmt_fixed(r.analytic_probability, prob_precision) + '\n';
    }
    write_output(opts.out_path, out);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"sub-THz urban microcell propagation toolkit"};
    app.require_subcommand(1);

    // registry
    CommonOpts registry_common;
    std::optional<double> registry_band;
    auto *registry = app.add_subcommand("registry", "Export the built-in CI model registry");
    registry->add_option("--band", registry_band, "Only this band (GHz)");
    add_common(registry, registry_common);
    enable_json_config(registry);
    registry->callback([&] { run_registry(registry_band, registry_common); });

    // predict
    CommonOpts predict_common;
    ModelKeyOpts predict_key;
    std::vector<double> predict_distances;
    auto *predict = app.add_subcommand("predict", "Evaluate CI path loss at given distances");
    add_model_key(predict, predict_key, true);
    predict->add_option("--d", predict_distances, "Distances in meters")->required();
    add_common(predict, predict_common);
    enable_json_config(predict);
    predict->callback([&] { run_predict(predict_key, predict_distances, predict_common); });

    // fit
    CommonOpts fit_common;
    std::string fit_input;
    std::optional<double> fit_max_pl;
    auto *fit = app.add_subcommand("fit", "MMSE-fit CI parameters from a measurement CSV");
    fit->add_option("--input", fit_input, "Measurement CSV")
        ->required()
        ->check(CLI::ExistingFile);
    fit->add_option("--max-pl", fit_max_pl,
                    "Censor samples at/above this path loss before fitting");
    add_common(fit, fit_common);
    enable_json_config(fit);
    fit->callback([&] { run_fit(fit_input, fit_max_pl, fit_common); });

    // synth
    CommonOpts synth_common;
    std::string synth_input;
    std::string synth_pdp_dir;
    double synth_snr = thzprop::kDefaultSnrThresholdDb;
    auto *synth = app.add_subcommand(
        "synth", "Synthesize omnidirectional path loss from directional sweeps");
    synth->add_option("--input", synth_input, "Measurement CSV")
        ->required()
        ->check(CLI::ExistingFile);
    synth->add_option("--pdp-dir", synth_pdp_dir,
                      "Directory with row<k>.pdp files matching CSV rows")
        ->check(CLI::ExistingDirectory);
    synth->add_option("--snr-threshold", synth_snr, "PDP SNR threshold in dB")
        ->capture_default_str();
    add_common(synth, synth_common);
    enable_json_config(synth);
    synth->callback([&] { run_synth(synth_input, synth_pdp_dir, synth_snr, synth_common); });

    // rooftop
    CommonOpts rooftop_common;
    std::string rooftop_config;
    auto *rooftop = app.add_subcommand(
        "rooftop", "Predict rooftop link received powers from a scenario JSON");
    rooftop->add_option("--config", rooftop_config, "Scenario JSON (budget, foliage, links)")
        ->required()
        ->check(CLI::ExistingFile);
    add_common(rooftop, rooftop_common);
    rooftop->callback([&] { run_rooftop(rooftop_config, rooftop_common); });

    // foliage
    CommonOpts foliage_common;
    std::vector<double> foliage_elevations = {80, 70, 60, 50, 40, 30, 20};
    double foliage_depth = 5.0;
    double foliage_rate = 0.9;
    bool foliage_statistical = false;
    std::uint64_t foliage_seed = 0;
    auto *foliage = app.add_subcommand("foliage",
                                       "Slant lengths and losses through the canopy");
    foliage->add_option("--elevations", foliage_elevations, "Elevation angles in degrees")
        ->capture_default_str();
    foliage->add_option("--depth", foliage_depth, "Canopy depth in meters")
        ->capture_default_str();
    foliage->add_option("--rate", foliage_rate, "Attenuation rate in dB/m")
        ->capture_default_str();
    foliage->add_flag("--statistical", foliage_statistical,
                      "Add a Gaussian sampled-loss column");
    foliage->add_option("--seed", foliage_seed, "Sampler seed")->capture_default_str();
    add_common(foliage, foliage_common);
    enable_json_config(foliage);
    foliage->callback([&] {
        run_foliage(foliage_elevations, foliage_depth, foliage_rate, foliage_statistical,
                    foliage_seed, foliage_common);
    });

    // coverage
    CommonOpts coverage_common;
    CoverageOpts cov;
    auto *coverage = app.add_subcommand(
        "coverage", "Monte Carlo + analytic outage over distance");
    add_model_key(coverage, cov.key, true);
    coverage->add_option("--d", cov.distances, "Explicit distances in meters");
    coverage->add_option("--dmin", cov.dmin, "Sweep start in meters");
    coverage->add_option("--dmax", cov.dmax, "Sweep end in meters");
    coverage->add_option("--step", cov.step, "Sweep step in meters");
    coverage->add_option("--samples", cov.samples, "Monte Carlo draws per distance")
        ->capture_default_str();
    coverage->add_option("--seed", cov.seed, "Monte Carlo seed")->capture_default_str();
    coverage->add_option("--workers", cov.workers, "Parallel workers (same result for any)")
        ->capture_default_str();
    coverage->add_option("--eirp", cov.eirp_dbm,
                         "Override EIRP in dBm (shifts the measurable budget)");
    coverage->add_option("--max-pl", cov.max_pl, "Override max measurable path loss in dB");
    coverage->add_flag("--compare", cov.compare,
                       "Compare 28/73/142 GHz side by side instead");
    add_common(coverage, coverage_common);
    enable_json_config(coverage);
    coverage->callback([&] { run_coverage(cov, coverage_common); });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 2;
    }
    catch (const thzprop::Error &e)
    {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}

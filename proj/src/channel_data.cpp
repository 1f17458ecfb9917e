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

#include "thzprop/channel_data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <system_error>

#include "thzprop/errors.hpp"
#include "thzprop/units.hpp"

namespace thzprop
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string_view::npos)
        {
            fields.push_back(trim(line.substr(begin)));
            break;
        }
        fields.push_back(trim(line.substr(begin, comma - begin)));
        begin = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view text, std::string_view what, std::size_t line)
{
    if (text == "-inf")
        return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw ParseError("unparsable number for " + std::string(what) + ": '" +
                             std::string(text) + "'",
                         line);
    return value;
}

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value)
{
    if (std::isinf(value))
        return value < 0 ? "-inf" : "inf";
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

bool ascii_iequals(std::string_view a, std::string_view b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

} // namespace

std::string to_string(Scenario s)
{
    return s == Scenario::LOS ? "LOS" : "NLOS";
}

Scenario scenario_from_string(std::string_view text)
{
    if (ascii_iequals(text, "LOS"))
        return Scenario::LOS;
    if (ascii_iequals(text, "NLOS"))
        return Scenario::NLOS;
    throw Error("unknown scenario '" + std::string(text) + "' (expected LOS or NLOS)");
}

PointingDirection make_pointing(double azimuth_deg, double elevation_deg)
{
    if (!std::isfinite(azimuth_deg) || !std::isfinite(elevation_deg))
        throw Error("pointing angles must be finite");
    if (elevation_deg < -90.0 || elevation_deg > 90.0)
        throw Error("elevation_deg must lie in [-90, +90], got " + format_double(elevation_deg));
    double az = std::fmod(azimuth_deg, 360.0);
    if (az < 0.0)
        az += 360.0;
    if (az >= 360.0) // fmod can land exactly on 360 after the correction
        az = 0.0;
    return PointingDirection{az, elevation_deg};
}

double angular_separation_deg(const PointingDirection &a, const PointingDirection &b)
{
    const double az1 = deg_to_rad(a.azimuth_deg);
    const double el1 = deg_to_rad(a.elevation_deg);
    const double az2 = deg_to_rad(b.azimuth_deg);
    const double el2 = deg_to_rad(b.elevation_deg);
    const double dot = std::cos(el1) * std::cos(el2) * std::cos(az1 - az2) +
                       std::sin(el1) * std::sin(el2);
    return rad_to_deg(std::acos(std::clamp(dot, -1.0, 1.0)));
}

double PowerDelayProfile::total_power_mw() const
{
    double total = 0.0;
    for (const double p : power_mw)
        total += p;
    return total;
}

void validate(const PowerDelayProfile &pdp)
{
    if (pdp.power_mw.empty())
        throw Error("PDP must contain at least one bin");
    if (!(pdp.bin_width_ns > 0.0))
        throw Error("PDP bin width must be positive");
    if (pdp.start_delay_ns < 0.0)
        throw Error("PDP start delay must be non-negative");
    if (!std::isfinite(pdp.noise_floor_dbm))
        throw Error("PDP noise floor must be finite");
    for (std::size_t i = 0; i < pdp.power_mw.size(); ++i)
        if (!std::isfinite(pdp.power_mw[i]) || pdp.power_mw[i] < 0.0)
            throw Error("PDP bin " + std::to_string(i) + " has invalid power");
}

void validate(const DirectionalRecord &record)
{
    if (record.tx_id.empty() || record.rx_id.empty())
        throw Error("record tx_id/rx_id must be non-empty");
    if (!(record.distance_3d_m >= 1.0))
        throw Error("distance_3d_m must be >= 1 m (CI reference distance), got " +
                    format_double(record.distance_3d_m));
    if (!(record.freq_ghz > 0.0))
        throw Error("freq_ghz must be positive");
    if (record.tx_gain_dbi < 0.0 || record.rx_gain_dbi < 0.0)
        throw Error("antenna gains must be >= 0 dBi");
    if (!(record.hpbw_deg > 0.0))
        throw Error("hpbw_deg must be positive");
    for (const PointingDirection *p : {&record.tx_pointing, &record.rx_pointing})
    {
        if (p->azimuth_deg < 0.0 || p->azimuth_deg >= 360.0)
            throw Error("azimuth_deg must lie in [0, 360)");
        if (p->elevation_deg < -90.0 || p->elevation_deg > 90.0)
            throw Error("elevation_deg must lie in [-90, +90]");
    }
    if (!record.received_power_dbm && !record.pdp)
        throw Error("record needs received_power_dbm or a PDP");
    if (record.received_power_dbm && !std::isfinite(*record.received_power_dbm))
        throw Error("received_power_dbm must be finite");
    if (record.pdp)
        validate(*record.pdp);
}

void validate(const MeasurementSet &set)
{
    for (std::size_t i = 0; i < set.records.size(); ++i)
    {
        try
        {
            validate(set.records[i]);
        }
        catch (const Error &e)
        {
            throw Error("record " + std::to_string(i + 1) + ": " + e.what());
        }
        if (set.records[i].freq_ghz != set.records.front().freq_ghz)
            throw Error("record " + std::to_string(i + 1) +
                        ": all records in a set must share freq_ghz");
    }
}

MeasurementSet parse_measurement_csv(std::istream &source, const CsvParseOptions &opts)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(source, line))
        throw ParseError("missing header", 1);
    ++line_no;
    if (trim(line) != kMeasurementCsvHeader)
        throw ParseError("header does not match the measurement CSV schema; expected '" +
                             std::string(kMeasurementCsvHeader) + "'",
                         line_no);

    MeasurementSet set;
    set.campaign_label = opts.campaign_label;
    std::vector<std::size_t> record_lines;

    while (std::getline(source, line))
    {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto fields = split_csv(line);
        if (fields.size() != 14)
            throw ParseError("expected 14 columns, got " + std::to_string(fields.size()),
                             line_no);

        DirectionalRecord rec;
        rec.tx_id = std::string(fields[0]);
        rec.rx_id = std::string(fields[1]);
        rec.distance_3d_m = parse_double(fields[2], "distance_3d_m", line_no);
        try
        {
            rec.scenario = scenario_from_string(fields[3]);
            rec.tx_pointing = make_pointing(parse_double(fields[4], "tx_az_deg", line_no),
                                            parse_double(fields[5], "tx_el_deg", line_no));
            rec.rx_pointing = make_pointing(parse_double(fields[6], "rx_az_deg", line_no),
                                            parse_double(fields[7], "rx_el_deg", line_no));
        }
        catch (const ParseError &)
        {
            throw;
        }
        catch (const Error &e)
        {
            throw ParseError(e.what(), line_no);
        }
        rec.freq_ghz = parse_double(fields[8], "freq_ghz", line_no);
        rec.tx_power_dbm = parse_double(fields[9], "tx_power_dbm", line_no);
        rec.tx_gain_dbi = parse_double(fields[10], "tx_gain_dbi", line_no);
        rec.rx_gain_dbi = parse_double(fields[11], "rx_gain_dbi", line_no);
        rec.hpbw_deg = parse_double(fields[12], "hpbw_deg", line_no);
        if (!fields[13].empty())
            rec.received_power_dbm = parse_double(fields[13], "received_power_dbm", line_no);
        else if (!opts.allow_missing_power)
            throw ParseError("received_power_dbm is empty and no PDP is attached", line_no);

        try
        {
            if (rec.received_power_dbm || !opts.allow_missing_power)
                validate(rec);
            else
            {
                // Signal presence is re-checked by validate(set) after the
                // caller attaches PDPs; check everything else now.
                DirectionalRecord probe = rec;
                probe.received_power_dbm = 0.0;
                validate(probe);
            }
        }
        catch (const Error &e)
        {
            throw ParseError(e.what(), line_no);
        }

        set.records.push_back(std::move(rec));
        record_lines.push_back(line_no);
    }

    if (!set.records.empty())
    {
        const double freq = set.records.front().freq_ghz;
        for (std::size_t i = 0; i < set.records.size(); ++i)
            if (set.records[i].freq_ghz != freq)
                throw ParseError("freq_ghz differs from the first record's " +
                                     format_double(freq),
                                 record_lines[i]);
    }
    return set;
}

MeasurementSet parse_measurement_csv(std::string_view text, const CsvParseOptions &opts)
{
    std::istringstream stream{std::string(text)};
    return parse_measurement_csv(stream, opts);
}

std::string to_csv(const MeasurementSet &set)
{
    std::string out{kMeasurementCsvHeader};
    out += '\n';
    for (const DirectionalRecord &r : set.records)
    {
        out += r.tx_id + ',' + r.rx_id + ',';
        out += format_double(r.distance_3d_m) + ',' + to_string(r.scenario) + ',';
        out += format_double(r.tx_pointing.azimuth_deg) + ',' +
               format_double(r.tx_pointing.elevation_deg) + ',';
        out += format_double(r.rx_pointing.azimuth_deg) + ',' +
               format_double(r.rx_pointing.elevation_deg) + ',';
        out += format_double(r.freq_ghz) + ',' + format_double(r.tx_power_dbm) + ',';
        out += format_double(r.tx_gain_dbi) + ',' + format_double(r.rx_gain_dbi) + ',';
        out += format_double(r.hpbw_deg) + ',';
        if (r.received_power_dbm)
            out += format_double(*r.received_power_dbm);
        out += '\n';
    }
    return out;
}

PowerDelayProfile parse_pdp_file(std::istream &source)
{
    std::string line;
    std::size_t line_no = 0;

    std::optional<double> noise_floor;
    std::vector<double> delays;
    std::vector<double> powers_mw;
    std::vector<std::size_t> row_lines;

    while (std::getline(source, line))
    {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty())
            continue;
        if (text.front() == '#')
        {
            const std::string_view meta = trim(text.substr(1));
            const std::size_t eq = meta.find('=');
            if (eq != std::string_view::npos &&
                trim(meta.substr(0, eq)) == "noise_floor_dbm")
                noise_floor = parse_double(trim(meta.substr(eq + 1)), "noise_floor_dbm",
                                           line_no);
            continue;
        }
        if (text == "delay_ns,power_dbm")
            continue;

        const auto fields = split_csv(text);
        if (fields.size() != 2)
            throw ParseError("expected 'delay_ns,power_dbm', got " +
                                 std::to_string(fields.size()) + " columns",
                             line_no);
        const double delay = parse_double(fields[0], "delay_ns", line_no);
        const double power_dbm = parse_double(fields[1], "power_dbm", line_no);
        if (!delays.empty() && delay <= delays.back())
            throw ParseError("delays must be strictly increasing", line_no);
        delays.push_back(delay);
        powers_mw.push_back(std::isinf(power_dbm) && power_dbm < 0 ? 0.0
                                                                   : dbm_to_mw(power_dbm));
        row_lines.push_back(line_no);
    }

    if (delays.empty())
        throw ParseError("PDP file has no data rows", line_no == 0 ? 1 : line_no);
    if (!noise_floor)
        throw ParseError("missing '# noise_floor_dbm=<v>' metadata line", 1);
    if (delays.front() < 0.0)
        throw ParseError("delays must be >= 0 ns", row_lines.front());

    PowerDelayProfile pdp;
    pdp.start_delay_ns = delays.front();
    pdp.noise_floor_dbm = *noise_floor;
    pdp.power_mw = std::move(powers_mw);
    if (delays.size() >= 2)
    {
        const double width = delays[1] - delays[0];
        for (std::size_t i = 2; i < delays.size(); ++i)
            if (std::abs((delays[i] - delays[i - 1]) - width) > 1e-6)
                throw ParseError("delays are not uniformly spaced (bin width " +
                                     format_double(width) + " ns violated)",
                                 row_lines[i]);
        pdp.bin_width_ns = width;
    }
    else
    {
        pdp.bin_width_ns = PowerDelayProfile::kDefaultBinWidthNs;
    }

    validate(pdp);
    return pdp;
}

PowerDelayProfile parse_pdp_file(std::string_view text)
{
    std::istringstream stream{std::string(text)};
    return parse_pdp_file(stream);
}

std::string to_pdp_file(const PowerDelayProfile &pdp)
{
    std::string out = "# noise_floor_dbm=" + format_double(pdp.noise_floor_dbm) + '\n';
    out += "delay_ns,power_dbm\n";
    for (std::size_t i = 0; i < pdp.power_mw.size(); ++i)
        out += format_double(pdp.delay_at(i)) + ',' + format_double(mw_to_dbm(pdp.power_mw[i])) +
               '\n';
    return out;
}

} // namespace thzprop

// SPDX-License-Identifier: Apache-2.0
//
// mmwchan - directional millimeter-wave channel measurement processing
// Copyright (C) 2026 The mmwchan Authors
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

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmwchan/campaign.hpp"
#include "mmwchan/delay_stats.hpp"
#include "mmwchan/distance_extension.hpp"
#include "mmwchan/errors.hpp"
#include "mmwchan/omni_synthesis.hpp"
#include "mmwchan/pathloss.hpp"
#include "mmwchan/raytrace.hpp"

namespace mmwchan
{

// Fixed numeric formatting for every table: six significant digits.
inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string fmt(const std::optional<double> &v) { return v ? fmt(*v) : std::string(); }

/// Comma-separated table with a header row.
class Table
{
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    Table &row(std::vector<std::string> cells)
    {
        if (cells.size() != columns_.size())
            throw PreconditionError("table row width does not match the header");
        rows_.push_back(std::move(cells));
        return *this;
    }

    const std::vector<std::string> &columns() const { return columns_; }
    const std::vector<std::vector<std::string>> &rows() const { return rows_; }

    std::string str() const
    {
        std::string out;
        auto line = [&](const std::vector<std::string> &cells)
        {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out += ',';
                out += cells[i];
            }
            out += '\n';
        };
        line(columns_);
        for (const auto &r : rows_)
            line(r);
        return out;
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

// Measured / with-signal / outage counts and distance ranges per class.
inline Table summaryTable(const CampaignSummary &s)
{
    Table t({"group", "class", "count", "d_min_m", "d_max_m"});
    const std::string within = "(d<=" + fmt(s.d_max_m) + "m)";
    auto add = [&](const std::string &group, const char *cls, const GroupCount &g)
    { t.row({group, cls, std::to_string(g.count), fmt(g.min_distance_m), fmt(g.max_distance_m)}); };
    auto block = [&](const std::string &group, GroupCount ClassSummary::*member)
    {
        add(group, "LOS", s.los.*member);
        add(group, "NLOS", s.nlos.*member);
    };
    block("measured " + within, &ClassSummary::measured_within);
    block("measured (all d)", &ClassSummary::measured_all);
    block("with signal " + within, &ClassSummary::signal_within);
    block("outage " + within, &ClassSummary::outage_within);
    block("with signal (all d)", &ClassSummary::signal_all);
    block("outage (all d)", &ClassSummary::outage_all);
    return t;
}

inline Table statsTable(const std::vector<std::pair<LosClass, std::optional<DelaySpreadStats>>> &per_class)
{
    Table t({"class", "n_samples", "mean_ns", "std_ns"});
    for (const auto &[cls, st] : per_class)
    {
        if (st)
            t.row({toString(cls), std::to_string(st->samples.size()), fmt(st->mean_ns), fmt(st->std_ns)});
        else
            t.row({toString(cls), "0", "", ""});
    }
    return t;
}

inline Table cdfTable(const Cdf &cdf)
{
    Table t({"value_ns", "cum_prob"});
    for (std::size_t i = 0; i < cdf.values.size(); ++i)
        t.row({fmt(cdf.values[i]), fmt(cdf.probabilities[i])});
    return t;
}

inline Table fitTable(const std::vector<std::pair<PathLossTag, CloseInModel>> &fits)
{
    Table t({"tag", "k_beams", "n", "sigma_db", "n_samples"});
    for (const auto &[tag, m] : fits)
        t.row({toString(tag), std::to_string(tag.k_beams), fmt(m.ple), fmt(m.shadow_sigma_db), std::to_string(m.n_samples)});
    return t;
}

struct LabeledDeeRow
{
    std::string freq_label;
    DeeTableRow row;
};

inline Table deeTable(const std::vector<LabeledDeeRow> &rows)
{
    Table t({"freq_label", "mode", "k", "ple", "dee", "d2_at_200m"});
    for (const auto &[label, r] : rows)
        t.row({label, toString(r.mode), std::to_string(r.k_beams), fmt(r.ple), fmt(r.dee), fmt(r.d2_m)});
    return t;
}

inline Table curveTable(const std::vector<CurvePoint> &pts)
{
    Table t({"d1", "d2"});
    for (const auto &p : pts)
        t.row({fmt(p.d1_m), fmt(p.d2_m)});
    return t;
}

inline Table rayPathTable(const std::vector<RayPath> &paths)
{
    Table t({"order", "length_m", "delay_ns", "aoa_az", "aoa_el"});
    for (const auto &p : paths)
        t.row({std::to_string(p.order()), fmt(p.total_length_m), fmt(p.delay_ns), fmt(p.aoa.azimuth_deg),
               fmt(p.aoa.elevation_deg)});
    return t;
}

// Synthesized-versus-measured counts next to the omnidirectional delay spread statistics.
inline Table omniStatsTable(const OmniReport &r)
{
    Table t({"class", "synthesized", "measured", "mean_ns", "std_ns"});
    for (LosClass c : {LosClass::los, LosClass::nlos})
    {
        const auto &cls = r.of(c);
        t.row({toString(c), std::to_string(cls.synthesized), std::to_string(cls.measured),
               cls.stats ? fmt(cls.stats->mean_ns) : "", cls.stats ? fmt(cls.stats->std_ns) : ""});
    }
    return t;
}

inline Table omniPdpTable(const OmniPdp &omni)
{
    Table t({"absolute_delay_ns", "power_mw_per_ns"});
    for (std::size_t k = 0; k < omni.pdp.size(); ++k)
        t.row({fmt(omni.pdp.delayNs(k)), fmt(omni.pdp.powers[k])});
    return t;
}

// ---- PLE table input -------------------------------------------------------

struct PleEntry
{
    std::string freq_label;
    CombineMode mode;
    int k_beams;
    double ple;
};

// CSV with header freq_label,mode,k,ple; blank lines and '#' comments are ignored.
inline std::vector<PleEntry> parsePleTable(const std::string &text, const std::string &source = "<ple-table>")
{
    std::vector<PleEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = true;
    while (std::getline(in, line))
    {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            cells.push_back(cell);
        const std::string locus = source + ":" + std::to_string(lineno);
        if (header)
        {
            if (cells != std::vector<std::string>{"freq_label", "mode", "k", "ple"})
                throw ParseError("expected header freq_label,mode,k,ple", locus);
            header = false;
            continue;
        }
        if (cells.size() != 4)
            throw ParseError("expected 4 fields", locus);
        PleEntry e;
        e.freq_label = cells[0];
        if (cells[1] == "coherent")
            e.mode = CombineMode::coherent;
        else if (cells[1] == "noncoherent")
            e.mode = CombineMode::noncoherent;
        else
            throw ParseError("mode must be coherent or noncoherent", locus);
        try
        {
            std::size_t used = 0;
            e.k_beams = std::stoi(cells[2], &used);
            if (used != cells[2].size())
                throw std::invalid_argument("k");
            e.ple = std::stod(cells[3], &used);
            if (used != cells[3].size())
                throw std::invalid_argument("ple");
        }
        catch (const std::exception &)
        {
            throw ParseError("malformed number", locus);
        }
        if (e.k_beams < 1)
            throw ParseError("k must be >= 1", locus);
        out.push_back(std::move(e));
    }
    if (header)
        throw ParseError("missing header", source);
    return out;
}

// DEE rows for every frequency label, in first-appearance order.
inline std::vector<LabeledDeeRow> deeTableFromPles(const std::vector<PleEntry> &entries, double d1_m = 200.0)
{
    std::vector<std::string> labels;
    std::map<std::string, std::map<FitKey, CloseInModel>> fits;
    for (const auto &e : entries)
    {
        if (!fits.count(e.freq_label))
            labels.push_back(e.freq_label);
        CloseInModel m;
        m.ple = e.ple;
        fits[e.freq_label][{e.mode, e.k_beams}] = m;
    }
    std::vector<LabeledDeeRow> out;
    for (const auto &label : labels)
        for (const auto &r : buildDeeTable(fits[label], d1_m))
            out.push_back({label, r});
    return out;
}

inline void writeText(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << text;
}

} // namespace mmwchan

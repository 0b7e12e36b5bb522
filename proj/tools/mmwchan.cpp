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

// mmwchan command-line front end. Each subcommand wraps one pipeline and writes
// comma-separated tables (six significant digits) to stdout or to --output.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmwchan.hpp"

namespace fs = std::filesystem;
using namespace mmwchan;

namespace
{

struct Common
{
    std::string input;
    std::string output;
    std::string cls;
    double threshold_db = kDefaultThresholdDb;
    std::vector<std::string> exclude;

    AnalysisOptions analysis() const
    {
        AnalysisOptions o;
        o.threshold_db = threshold_db;
        o.excluded.insert(exclude.begin(), exclude.end());
        if (cls == "los")
            o.los_class = LosClass::los;
        else if (cls == "nlos")
            o.los_class = LosClass::nlos;
        return o;
    }

    std::vector<LosClass> classes() const
    {
        if (cls == "los")
            return {LosClass::los};
        if (cls == "nlos")
            return {LosClass::nlos};
        return {LosClass::los, LosClass::nlos};
    }
};

void addCommon(CLI::App *cmd, Common &c, bool needs_input)
{
    auto *in = cmd->add_option("--input", c.input, "campaign file")->check(CLI::ExistingFile);
    if (needs_input)
        in->required();
    cmd->add_option("--output", c.output, "output directory (stdout when omitted)");
    cmd->add_option("--class", c.cls, "restrict to one class")->check(CLI::IsMember({"los", "nlos"}));
    cmd->add_option("--threshold-db", c.threshold_db, "SNR threshold above the noise floor")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--exclude", c.exclude, "location ids to leave out");
}

// Emit a table either to stdout or as <output>/<name>.
void emit(const Common &c, const std::string &name, const Table &t)
{
    if (c.output.empty())
    {
        std::cout << t.str();
        return;
    }
    fs::create_directories(c.output);
    writeText(fs::path(c.output) / name, t.str());
}

Campaign load(const Common &c)
{
    std::vector<std::string> warnings;
    auto campaign = loadCampaign(c.input, &warnings);
    for (const auto &w : warnings)
        std::cerr << "warning: " << w << "\n";
    return campaign;
}

CombineMode parseMode(const std::string &s) { return s == "noncoherent" ? CombineMode::noncoherent : CombineMode::coherent; }

Vec3 parsePoint(const std::string &s)
{
    Vec3 p;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> p.x >> c1 >> p.y >> c2 >> p.z) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw ValidationError("point", "expected x,y,z in metres, got '" + s + "'");
    return p;
}

std::string freqLabel(double hz) { return fmt(hz / 1e9) + "GHz"; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"mmwchan: directional millimeter-wave channel measurement processing"};
    app.require_subcommand(1);

    Common common;

    auto *summary = app.add_subcommand("summary", "measured / with signal / outage counts per class");
    addCommon(summary, common, true);
    double d_max = 200.0;
    summary->add_option("--d-max", d_max, "distance cut for the bounded rows (m)")->capture_default_str();

    auto *delay = app.add_subcommand("delay-stats", "directional RMS delay spread statistics and CDFs");
    addCommon(delay, common, true);
    std::string beams = "all";
    delay->add_option("--beams", beams, "all pointing angles or the strongest beam per location")
        ->check(CLI::IsMember({"all", "strongest"}))
        ->capture_default_str();

    auto *plfit = app.add_subcommand("pathloss-fit", "close-in path loss exponent fits");
    addCommon(plfit, common, true);
    int k_max = 4;
    std::string mode = "coherent";
    plfit->add_option("--k", k_max, "largest number of combined beams")->check(CLI::Range(1, 64))->capture_default_str();
    plfit->add_option("--mode", mode, "beam combining mode")
        ->check(CLI::IsMember({"coherent", "noncoherent"}))
        ->capture_default_str();

    auto *deecmd = app.add_subcommand("dee-table", "distance extension exponents per combining mode and beam count");
    addCommon(deecmd, common, false);
    std::string ple_file;
    double d1 = 200.0;
    deecmd->add_option("--ple-file", ple_file, "CSV of freq_label,mode,k,ple")->check(CLI::ExistingFile);
    deecmd->add_option("--d1", d1, "single-best-beam distance (m)")->capture_default_str();
    deecmd->add_option("--k", k_max, "largest number of combined beams (campaign input)")->check(CLI::Range(1, 64));

    auto *extend = app.add_subcommand("extend", "extended distance and extension factor for one DEE");
    double dee_value = 1.0;
    std::optional<double> curve_step;
    std::string extend_out;
    extend->add_option("--dee", dee_value, "distance extension exponent")->required();
    extend->add_option("--d1", d1, "single-best-beam distance (m)")->capture_default_str();
    extend->add_option("--curve-step", curve_step, "also emit the (d1, d2) curve from 1 m to d1 at this step");
    extend->add_option("--output", extend_out, "output directory (stdout when omitted)");

    auto *trace = app.add_subcommand("trace", "specular paths between two points");
    std::string scene_file, tx_s, rx_s, trace_out;
    int max_order = kMaxReflectionOrder;
    trace->add_option("--scene", scene_file, "scene file")->required()->check(CLI::ExistingFile);
    trace->add_option("--tx", tx_s, "transmitter x,y,z (m)")->required();
    trace->add_option("--rx", rx_s, "receiver x,y,z (m)")->required();
    trace->add_option("--max-order", max_order, "highest reflection order")->check(CLI::Range(0, kMaxReflectionOrder))->capture_default_str();
    trace->add_option("--output", trace_out, "output directory (stdout when omitted)");

    auto *omni = app.add_subcommand("synth-omni", "omnidirectional PDP synthesis and delay spread statistics");
    addCommon(omni, common, true);
    double gate = kDefaultMatchGateDeg;
    omni->add_option("--scene", scene_file, "scene file")->required()->check(CLI::ExistingFile);
    omni->add_option("--gate-deg", gate, "angular matching gate (deg)")->capture_default_str();

    auto *gen = app.add_subcommand("generate", "synthetic campaign with ground truth");
    std::uint64_t seed = 42;
    double freq = 73e9;
    GeneratorConfig gcfg;
    std::string gen_out = ".";
    gen->add_option("--seed", seed, "random seed")->capture_default_str();
    gen->add_option("--freq", freq, "sounder preset by carrier frequency (28e9 or 73e9)")->capture_default_str();
    gen->add_option("--ple", gcfg.ple, "true path loss exponent")->capture_default_str();
    gen->add_option("--shadow-db", gcfg.shadow_sigma_db, "log-normal shadowing std (dB)")->capture_default_str();
    gen->add_option("--reflection-loss-db", gcfg.reflection_loss_db, "extra loss per bounce (dB)")->capture_default_str();
    gen->add_option("--locations", gcfg.num_locations, "number of receiver locations")->capture_default_str();
    gen->add_option("--output", gen_out, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (summary->parsed())
        {
            const auto campaign = load(common);
            emit(common, "summary.csv", summaryTable(summarizeCampaign(campaign, d_max, common.analysis())));
        }
        else if (delay->parsed())
        {
            const auto campaign = load(common);
            const auto filter = beams == "strongest" ? BeamFilter::strongest_beam : BeamFilter::all_angles;
            std::vector<std::pair<LosClass, std::optional<DelaySpreadStats>>> per_class;
            for (LosClass c : common.classes())
            {
                std::optional<DelaySpreadStats> st;
                try
                {
                    st = directionalStats(campaign, c, filter, common.analysis());
                }
                catch (const EmptyStatsError &)
                {
                }
                if (st && !common.output.empty())
                {
                    const auto values = st->values();
                    emit(common, std::string("cdf_") + (c == LosClass::los ? "los" : "nlos") + ".csv",
                         cdfTable(empiricalCdf(values)));
                }
                per_class.emplace_back(c, std::move(st));
            }
            emit(common, "delay_stats.csv", statsTable(per_class));
        }
        else if (plfit->parsed())
        {
            const auto campaign = load(common);
            const auto opts = common.analysis();
            const double f = campaign.carrier_freq_hz;
            std::vector<std::pair<PathLossTag, CloseInModel>> fits;
            auto all = allAnglePathLossSamples(campaign, opts);
            fits.emplace_back(PathLossTag{SampleKind::all_angles, 1}, fitPle(all, f));
            for (int k = 1; k <= k_max; ++k)
            {
                auto s = multibeamPathLossSamples(campaign, static_cast<std::size_t>(k), parseMode(mode), opts);
                fits.emplace_back(s.empty() ? PathLossTag{} : s.front().tag, fitPle(s, f));
            }
            emit(common, "pathloss_fit.csv", fitTable(fits));
        }
        else if (deecmd->parsed())
        {
            std::vector<LabeledDeeRow> rows;
            if (!ple_file.empty())
                rows = deeTableFromPles(parsePleTable(detail::readFile(ple_file), ple_file), d1);
            else if (!common.input.empty())
            {
                const auto campaign = load(common);
                for (const auto &r : buildDeeTable(fitCombinedModels(campaign, k_max, common.analysis()), d1))
                    rows.push_back({freqLabel(campaign.carrier_freq_hz), r});
            }
            else
                throw ValidationError("--ple-file", "dee-table needs --ple-file or --input");
            emit(common, "dee_table.csv", deeTable(rows));
        }
        else if (extend->parsed())
        {
            Common out;
            out.output = extend_out;
            Table t({"d1", "dee", "d2", "def"});
            t.row({fmt(d1), fmt(dee_value), fmt(extendedDistance(d1, dee_value)), fmt(distanceExtensionFactor(d1, dee_value))});
            emit(out, "extend.csv", t);
            if (curve_step)
                emit(out, "curve.csv", curveTable(extensionCurve(dee_value, kReferenceDistanceM, d1, *curve_step)));
        }
        else if (trace->parsed())
        {
            Common out;
            out.output = trace_out;
            const auto scene = loadScene(scene_file);
            emit(out, "paths.csv", rayPathTable(tracePaths(scene, parsePoint(tx_s), parsePoint(rx_s), max_order)));
        }
        else if (omni->parsed())
        {
            const auto campaign = load(common);
            const auto scene = loadScene(scene_file);
            OmniOptions oo;
            oo.gate_deg = gate;
            const auto report = omniStats(campaign, scene, common.analysis(), oo);
            emit(common, "omni_stats.csv", omniStatsTable(report));
            Table failures({"location_id", "class", "reason"});
            for (const auto &r : report.locations)
            {
                if (!r.failure.empty())
                {
                    failures.row({r.id, toString(r.los_class), r.failure});
                    std::cerr << "not synthesized: " << r.id << " (" << r.failure << ")\n";
                }
                else if (!common.output.empty())
                    emit(common, "omni_pdp_" + r.id + ".csv", omniPdpTable(*r.omni));
            }
            if (!common.output.empty())
                emit(common, "failures.csv", failures);
        }
        else if (gen->parsed())
        {
            if (freq == kSounder28GHz.carrier_freq_hz)
                gcfg.sounder = kSounder28GHz;
            else if (freq == kSounder73GHz.carrier_freq_hz)
                gcfg.sounder = kSounder73GHz;
            else
                throw ValidationError("--freq", "no sounder preset at " + fmt(freq) + " Hz (use 28e9 or 73e9)");
            gcfg.seed = seed;
            const auto g = generateCampaign(gcfg);
            fs::create_directories(gen_out);
            saveCampaign(g.campaign, fs::path(gen_out) / "campaign.json");
            writeText(fs::path(gen_out) / "ground_truth.json", serializeGroundTruth(g.truth));
            writeText(fs::path(gen_out) / "scene.json", serializeScene(g.scene));
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

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

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmwchan/campaign.hpp"
#include "mmwchan/delay_stats.hpp"
#include "mmwchan/parallel.hpp"
#include "mmwchan/raytrace.hpp"

namespace mmwchan
{

struct AnglePathMatch
{
    std::size_t record_index;   // into LocationMeasurement::records
    AngleRecord record;         // thresholded copy
    PredictedArrival path;
    double angular_error_deg;
};

struct AnglePathPairing
{
    std::vector<AnglePathMatch> matches; // strongest measured record first
    std::vector<std::size_t> unmatched_records;
    std::vector<std::size_t> unmatched_paths; // indices into the predicted arrival list
};

// Greedy pairing of the strongest measured angles with predicted arrival directions.
// Records are visited by descending total power (at most max_records of them); each takes
// the nearest unused prediction within gate_deg of great-circle distance, the shorter
// predicted path winning an exact distance tie.
inline AnglePathPairing matchAnglesToPaths(const LocationMeasurement &location, std::span<const PredictedArrival> paths,
                                           double gate_deg = kDefaultMatchGateDeg,
                                           double threshold_db = kDefaultThresholdDb, std::size_t max_records = 4)
{
    AnglePathPairing out;
    std::vector<bool> used(paths.size(), false);
    const auto ranked = rankBeams(location, threshold_db);
    for (std::size_t r = 0; r < ranked.size() && r < max_records; ++r)
    {
        const auto &rec = location.records[ranked[r].record_index];
        std::optional<std::size_t> best;
        double best_dist = 0.0;
        for (std::size_t j = 0; j < paths.size(); ++j)
        {
            if (used[j])
                continue;
            const double d = angularDistanceDeg(rec.angles(), paths[j].aoa);
            if (d > gate_deg)
                continue;
            if (!best || d < best_dist || (d == best_dist && paths[j].length_m < paths[*best].length_m))
            {
                best = j;
                best_dist = d;
            }
        }
        if (!best)
        {
            out.unmatched_records.push_back(ranked[r].record_index);
            continue;
        }
        used[*best] = true;
        AngleRecord thresholded = rec;
        thresholded.pdp = thresholdPdp(rec.pdp, threshold_db);
        out.matches.push_back({ranked[r].record_index, std::move(thresholded), paths[*best], best_dist});
    }
    for (std::size_t j = 0; j < paths.size(); ++j)
        if (!used[j])
            out.unmatched_paths.push_back(j);
    return out;
}

// Omnidirectional profile on the absolute propagation-time axis.
struct OmniPdp
{
    Pdp pdp;
};

// Shift each matched excess-delay profile so that its first non-zero bin lands on the
// predicted absolute delay of its path, then add powers bin by bin. The axis starts at the
// earliest predicted delay; later profiles are placed at the nearest whole bin from there
// (at most half a bin of quantization).
inline OmniPdp synthesizeOmniPdp(const AnglePathPairing &pairing)
{
    if (pairing.matches.empty())
        throw PreconditionError("omnidirectional synthesis needs at least one matched angle");
    const double bw = pairing.matches.front().record.pdp.bin_width_ns;
    double origin = pairing.matches.front().path.delay_ns;
    double noise = 0.0;
    for (const auto &m : pairing.matches)
    {
        if (m.record.pdp.bin_width_ns != bw)
            throw PreconditionError("matched profiles use different bin widths");
        if (!hasPower(m.record.pdp))
            throw PreconditionError("matched profile carries no power");
        origin = std::min(origin, m.path.delay_ns);
        noise = std::max(noise, m.record.pdp.noise_floor);
    }

    OmniPdp omni;
    omni.pdp.bin_width_ns = bw;
    omni.pdp.start_delay_ns = origin;
    omni.pdp.noise_floor = noise;
    for (const auto &m : pairing.matches)
    {
        const auto &p = m.record.pdp.powers;
        std::size_t first = 0;
        while (!(p[first] > 0.0))
            ++first;
        const auto shift = static_cast<std::size_t>(std::llround((m.path.delay_ns - origin) / bw));
        const std::size_t needed = shift + (p.size() - first);
        if (omni.pdp.powers.size() < needed)
            omni.pdp.powers.resize(needed, 0.0);
        for (std::size_t k = first; k < p.size(); ++k)
            omni.pdp.powers[shift + (k - first)] += p[k];
    }
    return omni;
}

struct OmniLocationResult
{
    std::string id;
    LosClass los_class = LosClass::nlos;
    double tr_distance_m = 0.0;
    std::optional<OmniPdp> omni;
    double sigma_tau_ns = 0.0;
    std::size_t matched_angles = 0;
    std::string failure; // empty when synthesized
};

struct OmniClassResult
{
    std::size_t synthesized = 0;
    std::size_t measured = 0; // locations with signal
    std::optional<DelaySpreadStats> stats;
};

struct OmniReport
{
    OmniClassResult los;
    OmniClassResult nlos;
    std::vector<OmniLocationResult> locations; // every location with signal, file order

    const OmniClassResult &of(LosClass c) const { return c == LosClass::los ? los : nlos; }
};

struct OmniOptions
{
    double gate_deg = kDefaultMatchGateDeg;
    int max_order = kMaxReflectionOrder;
    std::size_t max_angles = 4;
};

// Trace, match, synthesize and compute the omnidirectional RMS delay spread at every
// location with signal. Locations that cannot be synthesized are reported, not fatal.
inline OmniReport omniStats(const Campaign &campaign, std::span<const Facet> scene, const AnalysisOptions &opts = {},
                            const OmniOptions &omni_opts = {})
{
    std::vector<const LocationMeasurement *> locs;
    for (const auto &loc : campaign.locations)
        if (opts.selects(loc) && hasSignal(loc, opts.threshold_db))
            locs.push_back(&loc);

    OmniReport report;
    report.locations = parallelMap(locs.size(), [&](std::size_t i)
                                   {
        const auto &loc = *locs[i];
        OmniLocationResult res;
        res.id = loc.id;
        res.los_class = loc.los_class;
        res.tr_distance_m = loc.tr_distance_m;
        if (!loc.tx_pos || !loc.rx_pos)
        {
            res.failure = "missing tx_pos/rx_pos";
            return res;
        }
        const auto paths = tracePaths(scene, *loc.tx_pos, *loc.rx_pos, omni_opts.max_order);
        if (paths.empty())
        {
            res.failure = "no traced paths";
            return res;
        }
        const auto predicted = predictStrongestAoas(paths, omni_opts.max_angles);
        const auto pairing = matchAnglesToPaths(loc, predicted, omni_opts.gate_deg, opts.threshold_db, omni_opts.max_angles);
        if (pairing.matches.empty())
        {
            res.failure = "no measured angle within the matching gate";
            return res;
        }
        res.matched_angles = pairing.matches.size();
        res.omni = synthesizeOmniPdp(pairing);
        res.sigma_tau_ns = rmsDelaySpread(res.omni->pdp);
        return res; });

    std::vector<DelaySample> los_samples, nlos_samples;
    for (const auto &r : report.locations)
    {
        OmniClassResult &cls = r.los_class == LosClass::los ? report.los : report.nlos;
        ++cls.measured;
        if (!r.omni)
            continue;
        ++cls.synthesized;
        (r.los_class == LosClass::los ? los_samples : nlos_samples).push_back({r.id, 0.0, 0.0, r.sigma_tau_ns});
    }
    if (!los_samples.empty())
        report.los.stats = makeStats(std::move(los_samples));
    if (!nlos_samples.empty())
        report.nlos.stats = makeStats(std::move(nlos_samples));
    return report;
}

} // namespace mmwchan

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

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "mmwchan/campaign.hpp"

namespace mmwchan
{

// Free space path loss at the 1 m close-in reference distance (dB).
inline double fsplAtRef(double freq_hz)
{
    if (!(freq_hz > 0.0))
        throw DomainError("carrier frequency must be > 0");
    return 20.0 * std::log10(4.0 * kPi * kReferenceDistanceM * freq_hz / kSpeedOfLight);
}

enum class SampleKind
{
    single_best_beam,
    multibeam,
    all_angles
};

struct PathLossTag
{
    SampleKind kind = SampleKind::single_best_beam;
    int k_beams = 1;

    bool operator==(const PathLossTag &) const = default;
};

inline std::string toString(const PathLossTag &t)
{
    switch (t.kind)
    {
    case SampleKind::single_best_beam:
        return "single-best-beam";
    case SampleKind::multibeam:
        return "multibeam-" + std::to_string(t.k_beams);
    case SampleKind::all_angles:
        return "all-angles";
    }
    return "?";
}

struct PathLossSample
{
    std::string location_id;
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    PathLossTag tag;
    bool beyond_measurable = false; // exceeds the campaign's max measurable path loss; excluded from fits

    bool operator==(const PathLossSample &) const = default;
};

// Close-in free space reference model: PL(d) = FSPL(1 m) + 10 n log10(d / 1 m).
struct CloseInModel
{
    double d0_m = kReferenceDistanceM;
    double carrier_freq_hz = 0.0;
    double ple = 0.0;
    double shadow_sigma_db = 0.0;
    std::size_t n_samples = 0;
};

// Gain-free path loss from a received power: PL = Pt + Gt + Gr - Pr.
inline PathLossSample pathLossFromRecord(const Campaign &campaign, const LocationMeasurement &location,
                                         double received_power_dbm, PathLossTag tag = {})
{
    if (!std::isfinite(received_power_dbm))
        throw DomainError("received power must be finite (location " + location.id + ")");
    PathLossSample s;
    s.location_id = location.id;
    s.distance_m = location.tr_distance_m;
    s.path_loss_db = campaign.tx_power_dbm + campaign.tx_gain_dbi + campaign.rx_gain_dbi - received_power_dbm;
    s.tag = tag;
    s.beyond_measurable = s.path_loss_db > campaign.max_path_loss_db;
    return s;
}

// Least-squares path loss exponent through the fixed FSPL(1 m) anchor:
//   n = sum((PL_i - FSPL) x_i) / sum(x_i^2),  x_i = 10 log10(d_i)
// Samples flagged beyond_measurable are skipped. shadow_sigma_db is the RMS residual.
inline CloseInModel fitPle(std::span<const PathLossSample> samples, double freq_hz)
{
    const double anchor = fsplAtRef(freq_hz);
    double sxy = 0.0, sxx = 0.0;
    std::size_t used = 0;
    for (const auto &s : samples)
    {
        if (s.beyond_measurable)
            continue;
        if (!(s.distance_m >= kReferenceDistanceM))
            throw DomainError("path loss sample below the 1 m reference distance");
        const double x = 10.0 * std::log10(s.distance_m);
        sxy += (s.path_loss_db - anchor) * x;
        sxx += x * x;
        ++used;
    }
    if (used < 2)
        throw DomainError("path loss fit needs at least 2 measurable samples");
    if (!(sxx > 0.0))
        throw DomainError("degenerate path loss fit: every sample sits at the reference distance");

    CloseInModel m;
    m.carrier_freq_hz = freq_hz;
    m.ple = sxy / sxx;
    m.n_samples = used;
    double rss = 0.0;
    for (const auto &s : samples)
    {
        if (s.beyond_measurable)
            continue;
        const double r = s.path_loss_db - (anchor + m.ple * 10.0 * std::log10(s.distance_m));
        rss += r * r;
    }
    m.shadow_sigma_db = std::sqrt(rss / static_cast<double>(used));
    return m;
}

inline double predictPathLoss(const CloseInModel &model, double d_m)
{
    if (!(d_m >= kReferenceDistanceM))
        throw DomainError("close-in model is defined for d >= 1 m");
    return fsplAtRef(model.carrier_freq_hz) + 10.0 * model.ple * std::log10(d_m / model.d0_m);
}

// One sample per valid pointing angle of every selected location.
inline std::vector<PathLossSample> allAnglePathLossSamples(const Campaign &campaign, const AnalysisOptions &opts = {})
{
    std::vector<PathLossSample> out;
    for (const auto &loc : campaign.locations)
    {
        if (!opts.selects(loc) || loc.outage)
            continue;
        for (const auto &rec : loc.records)
        {
            const double p = totalPower(thresholdPdp(rec.pdp, opts.threshold_db));
            if (p > 0.0)
                out.push_back(pathLossFromRecord(campaign, loc, mwToDbm(p), {SampleKind::all_angles, 1}));
        }
    }
    return out;
}

// One sample per location from its strongest pointing angle.
inline std::vector<PathLossSample> strongestBeamPathLossSamples(const Campaign &campaign,
                                                                const AnalysisOptions &opts = {})
{
    std::vector<PathLossSample> out;
    for (const auto &loc : campaign.locations)
    {
        if (!opts.selects(loc) || loc.outage)
            continue;
        const auto ranked = rankBeams(loc, opts.threshold_db);
        if (!ranked.empty())
            out.push_back(pathLossFromRecord(campaign, loc, mwToDbm(ranked.front().power_mw),
                                             {SampleKind::single_best_beam, 1}));
    }
    return out;
}

} // namespace mmwchan

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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmwchan/beam_combining.hpp"
#include "mmwchan/pathloss.hpp"

namespace mmwchan
{

// Distance extension exponent n1/n2 between the single-best-beam PLE (n1) and a
// multibeam PLE (n2). Both models share the FSPL(1 m) anchor, so equal path loss at
// d1 and d2 gives d2 = d1^(n1/n2).
struct DeeResult
{
    double n1 = 0.0;
    double n2 = 0.0;
    double dee = 1.0;
    std::optional<CombineMode> mode;
    int k_beams = 1;
};

inline DeeResult dee(double n1, double n2)
{
    if (!(n2 > 0.0))
        throw PreconditionError("multibeam PLE n2 must be > 0");
    if (n1 < n2)
        throw PreconditionError("combining beams cannot raise the path loss exponent: need n1 >= n2");
    return {n1, n2, n1 / n2, std::nullopt, 1};
}

namespace detail
{
inline void checkExtensionDomain(double d1_m, double dee)
{
    if (!(d1_m >= kReferenceDistanceM))
        throw DomainError("distance extension requires d1 >= 1 m (the close-in anchor)");
    if (!(dee >= 1.0))
        throw DomainError("distance extension exponent must be >= 1");
}
} // namespace detail

inline double extendedDistance(double d1_m, double dee)
{
    detail::checkExtensionDomain(d1_m, dee);
    return std::pow(d1_m, dee);
}

// Coverage multiplier d2/d1 = d1^(DEE - 1).
inline double distanceExtensionFactor(double d1_m, double dee)
{
    detail::checkExtensionDomain(d1_m, dee);
    return std::pow(d1_m, dee - 1.0);
}

// Same factor from a pair of distances: (d2 - d1)/d1 + 1.
inline double extensionFactorFromDistances(double d1_m, double d2_m)
{
    if (!(d1_m >= kReferenceDistanceM))
        throw DomainError("distance extension requires d1 >= 1 m (the close-in anchor)");
    return (d2_m - d1_m) / d1_m + 1.0;
}

struct CurvePoint
{
    double d1_m;
    double d2_m;
};

// (d1, d1^dee) sampled at d_min, d_min + step, ... with d_max always included exactly.
inline std::vector<CurvePoint> extensionCurve(double dee, double d_min, double d_max, double step)
{
    if (!(d_min >= kReferenceDistanceM) || !(d_min < d_max))
        throw DomainError("extension curve needs 1 <= d_min < d_max");
    if (!(step > 0.0))
        throw DomainError("extension curve step must be > 0");
    if (!(dee >= 1.0))
        throw DomainError("distance extension exponent must be >= 1");
    std::vector<CurvePoint> pts;
    for (std::size_t i = 0;; ++i)
    {
        const double d = d_min + static_cast<double>(i) * step;
        if (d >= d_max)
            break;
        pts.push_back({d, std::pow(d, dee)});
    }
    pts.push_back({d_max, std::pow(d_max, dee)});
    return pts;
}

struct DeeTableRow
{
    CombineMode mode;
    int k_beams;
    double ple;
    double dee;
    double d2_m;
};

using FitKey = std::pair<CombineMode, int>;

// One row per (mode, k > 1): PLE, DEE against that mode's k = 1 baseline, and the
// distance d2 with the same path loss as d1 under the single best beam.
inline std::vector<DeeTableRow> buildDeeTable(const std::map<FitKey, CloseInModel> &fits, double d1_m = 200.0)
{
    std::vector<DeeTableRow> rows;
    for (CombineMode mode : {CombineMode::coherent, CombineMode::noncoherent})
    {
        const bool any = std::any_of(fits.begin(), fits.end(), [&](const auto &kv) { return kv.first.first == mode; });
        if (!any)
            continue;
        const auto base = fits.find({mode, 1});
        if (base == fits.end())
            throw PreconditionError(std::string("missing k = 1 baseline for ") + toString(mode) + " combining");
        for (const auto &[key, model] : fits)
        {
            if (key.first != mode || key.second <= 1)
                continue;
            const auto r = dee(base->second.ple, model.ple);
            rows.push_back({mode, key.second, model.ple, r.dee, extendedDistance(d1_m, r.dee)});
        }
    }
    if (rows.empty() && fits.empty())
        throw PreconditionError("no path loss fits supplied");
    return rows;
}

// Close-in fits per (mode, k) for k = 1..k_max from a campaign.
inline std::map<FitKey, CloseInModel> fitCombinedModels(const Campaign &campaign, int k_max,
                                                        const AnalysisOptions &opts = {})
{
    std::map<FitKey, CloseInModel> fits;
    for (CombineMode mode : {CombineMode::coherent, CombineMode::noncoherent})
        for (int k = 1; k <= k_max; ++k)
        {
            const auto samples = multibeamPathLossSamples(campaign, static_cast<std::size_t>(k), mode, opts);
            fits[{mode, k}] = fitPle(samples, campaign.carrier_freq_hz);
        }
    return fits;
}

} // namespace mmwchan

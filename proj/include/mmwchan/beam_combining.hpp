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
#include <functional>
#include <span>
#include <vector>

#include "mmwchan/pathloss.hpp"

namespace mmwchan
{

enum class CombineMode
{
    coherent,
    noncoherent
};

inline const char *toString(CombineMode m) { return m == CombineMode::coherent ? "coherent" : "noncoherent"; }

struct CombinedPower
{
    double power_mw = 0.0;
    std::size_t beams_used = 0;
    bool k_exceeded = false; // fewer than k beams were available; all of them were used
};

namespace detail
{

inline std::vector<double> strongestFirst(std::span<const double> powers_mw, std::size_t k)
{
    if (powers_mw.empty())
        throw DomainError("beam combining needs at least one beam");
    if (k == 0)
        throw DomainError("beam count k must be >= 1");
    for (double p : powers_mw)
        if (!(p >= 0.0) || !std::isfinite(p))
            throw DomainError("beam powers must be finite and >= 0");
    std::vector<double> sorted(powers_mw.begin(), powers_mw.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.resize(std::min(k, sorted.size()));
    return sorted;
}

} // namespace detail

// Sum of the k largest powers (power addition in mW).
inline CombinedPower combineNonCoherent(std::span<const double> powers_mw, std::size_t k)
{
    const auto top = detail::strongestFirst(powers_mw, k);
    double sum = 0.0;
    for (double p : top)
        sum += p;
    return {sum, top.size(), k > powers_mw.size()};
}

// Squared sum of amplitudes of the k largest powers, (sum sqrt(P_i))^2, expanded as
// sum P_i + 2 sum_{i<j} sqrt(P_i P_j). The expansion keeps coherent >= non-coherent and
// k = 1 -> max(P) exact in floating point.
inline CombinedPower combineCoherent(std::span<const double> powers_mw, std::size_t k)
{
    const auto top = detail::strongestFirst(powers_mw, k);
    double sum = 0.0;
    for (double p : top)
        sum += p;
    double cross = 0.0;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
            cross += std::sqrt(top[i]) * std::sqrt(top[j]);
    return {sum + 2.0 * cross, top.size(), k > powers_mw.size()};
}

inline CombinedPower combine(std::span<const double> powers_mw, std::size_t k, CombineMode mode)
{
    return mode == CombineMode::coherent ? combineCoherent(powers_mw, k) : combineNonCoherent(powers_mw, k);
}

// Path loss samples from the k strongest beams of every selected, non-outage location.
// k = 1 yields the single-best-beam samples.
inline std::vector<PathLossSample> multibeamPathLossSamples(const Campaign &campaign, std::size_t k, CombineMode mode,
                                                            const AnalysisOptions &opts = {})
{
    if (k == 0)
        throw DomainError("beam count k must be >= 1");
    const PathLossTag tag = k == 1 ? PathLossTag{SampleKind::single_best_beam, 1}
                                   : PathLossTag{SampleKind::multibeam, static_cast<int>(k)};
    std::vector<PathLossSample> out;
    for (const auto &loc : campaign.locations)
    {
        if (!opts.selects(loc) || loc.outage)
            continue;
        const auto ranked = rankBeams(loc, opts.threshold_db);
        if (ranked.empty())
            continue;
        std::vector<double> powers;
        powers.reserve(ranked.size());
        for (const auto &b : ranked)
            powers.push_back(b.power_mw);
        const auto c = combine(powers, k, mode);
        out.push_back(pathLossFromRecord(campaign, loc, mwToDbm(c.power_mw), tag));
    }
    return out;
}

} // namespace mmwchan

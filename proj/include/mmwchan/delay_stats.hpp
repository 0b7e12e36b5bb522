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
#include "mmwchan/parallel.hpp"

namespace mmwchan
{

namespace detail
{

struct DelayMoments
{
    double first_delay_ns; // delay of the first bin carrying power
    double mean_offset_ns; // power-weighted mean delay, relative to first_delay_ns
    double variance_ns2;
};

// Power-weighted delay moments. Delays are measured from the first non-zero bin as integer
// multiples of the bin width, so the spread depends only on the powers and the bin spacing:
// translating the profile leaves it bit-for-bit unchanged. Variance uses the central
// (two-pass) form, algebraically equal to E[t^2] - E[t]^2 but never negative.
inline DelayMoments delayMoments(const Pdp &pdp)
{
    const auto &p = pdp.powers;
    std::size_t first = 0;
    while (first < p.size() && !(p[first] > 0.0))
        ++first;
    if (first == p.size())
        throw UndefinedMomentError("delay moments undefined for an all-zero profile");

    double weight = 0.0;
    for (std::size_t k = first; k < p.size(); ++k)
        weight += p[k];
    // normalized weights keep symmetric cases exact (equal impulses give exactly 1/2 each)
    double mean = 0.0;
    for (std::size_t k = first; k < p.size(); ++k)
        mean += (p[k] / weight) * (static_cast<double>(k - first) * pdp.bin_width_ns);
    double variance = 0.0;
    for (std::size_t k = first; k < p.size(); ++k)
    {
        const double dt = static_cast<double>(k - first) * pdp.bin_width_ns - mean;
        variance += (p[k] / weight) * dt * dt;
    }
    return {pdp.delayNs(first), mean, variance};
}

} // namespace detail

// Mean excess delay (ns) on the profile's own delay axis.
inline double meanExcessDelay(const Pdp &pdp)
{
    const auto m = detail::delayMoments(pdp);
    return m.first_delay_ns + m.mean_offset_ns;
}

// RMS delay spread (ns).
inline double rmsDelaySpread(const Pdp &pdp)
{
    return std::sqrt(detail::delayMoments(pdp).variance_ns2);
}

struct DelaySample
{
    std::string location_id;
    double azimuth_deg;
    double elevation_deg;
    double sigma_tau_ns;
};

struct DelaySpreadStats
{
    double mean_ns = 0.0;
    double std_ns = 0.0; // population standard deviation
    std::vector<DelaySample> samples;

    std::vector<double> values() const
    {
        std::vector<double> v;
        v.reserve(samples.size());
        for (const auto &s : samples)
            v.push_back(s.sigma_tau_ns);
        return v;
    }
};

// Population mean and standard deviation over the given samples (in their given order).
inline DelaySpreadStats makeStats(std::vector<DelaySample> samples)
{
    if (samples.empty())
        throw EmptyStatsError("no delay spread samples");
    DelaySpreadStats s;
    double sum = 0.0;
    for (const auto &x : samples)
        sum += x.sigma_tau_ns;
    s.mean_ns = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (const auto &x : samples)
        ss += (x.sigma_tau_ns - s.mean_ns) * (x.sigma_tau_ns - s.mean_ns);
    s.std_ns = std::sqrt(ss / static_cast<double>(samples.size()));
    s.samples = std::move(samples);
    return s;
}

enum class BeamFilter
{
    all_angles,
    strongest_beam
};

// Directional RMS delay spread statistics for one LOS class.
//   all_angles     - one sample per record that survives thresholding
//   strongest_beam - one sample per location, from the record with the largest total power
// Samples follow file order (location, then record) whatever the thread count.
inline DelaySpreadStats directionalStats(const Campaign &campaign, LosClass los_class, BeamFilter filter,
                                         const AnalysisOptions &opts = {})
{
    std::vector<const LocationMeasurement *> locs;
    for (const auto &loc : campaign.locations)
        if (opts.selects(loc) && loc.los_class == los_class && !loc.outage)
            locs.push_back(&loc);

    auto per_location = parallelMap(locs.size(), [&](std::size_t i)
                                    {
        const auto &loc = *locs[i];
        std::vector<DelaySample> out;
        if (filter == BeamFilter::strongest_beam)
        {
            const auto ranked = rankBeams(loc, opts.threshold_db);
            if (!ranked.empty())
            {
                const auto &rec = loc.records[ranked.front().record_index];
                out.push_back({loc.id, rec.azimuth_deg, rec.elevation_deg,
                               rmsDelaySpread(thresholdPdp(rec.pdp, opts.threshold_db))});
            }
            return out;
        }
        for (const auto &rec : loc.records)
        {
            const Pdp t = thresholdPdp(rec.pdp, opts.threshold_db);
            if (hasPower(t))
                out.push_back({loc.id, rec.azimuth_deg, rec.elevation_deg, rmsDelaySpread(t)});
        }
        return out; });

    std::vector<DelaySample> samples;
    for (auto &v : per_location)
        samples.insert(samples.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    if (samples.empty())
        throw EmptyStatsError(std::string("no valid delay spread samples for class ") + toString(los_class));
    return makeStats(std::move(samples));
}

// Empirical CDF: sorted values with cumulative probability k/N at the k-th value.
struct Cdf
{
    std::vector<double> values;
    std::vector<double> probabilities;

    // F(x) = (#samples <= x) / N
    double operator()(double x) const
    {
        const auto it = std::upper_bound(values.begin(), values.end(), x);
        return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
    }
};

inline Cdf empiricalCdf(std::span<const double> samples)
{
    if (samples.empty())
        throw EmptyStatsError("empirical CDF of an empty sample set");
    Cdf cdf;
    cdf.values.assign(samples.begin(), samples.end());
    std::sort(cdf.values.begin(), cdf.values.end());
    const double n = static_cast<double>(cdf.values.size());
    cdf.probabilities.reserve(cdf.values.size());
    for (std::size_t k = 1; k <= cdf.values.size(); ++k)
        cdf.probabilities.push_back(static_cast<double>(k) / n);
    return cdf;
}

// Smallest sample value x with F(x) >= p.
inline double percentile(const Cdf &cdf, double p)
{
    if (!(p > 0.0 && p <= 1.0))
        throw DomainError("percentile level must lie in (0, 1]");
    if (cdf.values.empty())
        throw EmptyStatsError("percentile of an empty CDF");
    const auto it = std::lower_bound(cdf.probabilities.begin(), cdf.probabilities.end(), p);
    const auto k = static_cast<std::size_t>(it - cdf.probabilities.begin());
    return cdf.values[std::min(k, cdf.values.size() - 1)];
}

} // namespace mmwchan

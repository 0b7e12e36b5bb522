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
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmwchan/constants.hpp"
#include "mmwchan/errors.hpp"
#include "mmwchan/geometry.hpp"

namespace mmwchan
{

// Time-binned power density profile. Bin k sits at delay start_delay_ns + k * bin_width_ns;
// powers are densities in mW/ns.
struct Pdp
{
    double bin_width_ns = kDefaultBinWidthNs;
    double start_delay_ns = 0.0;
    double noise_floor = 0.0; // mean thermal noise density, mW/ns
    std::vector<double> powers;

    std::size_t size() const { return powers.size(); }
    double delayNs(std::size_t k) const { return start_delay_ns + static_cast<double>(k) * bin_width_ns; }
    bool operator==(const Pdp &) const = default;
};

struct AngleRecord
{
    double azimuth_deg = 0.0;   // bearing from True North, [0, 360)
    double elevation_deg = 0.0; // [-90, 90]
    Pdp pdp;
    bool boresight = false;

    Angles angles() const { return {azimuth_deg, elevation_deg}; }
    bool operator==(const AngleRecord &) const = default;
};

enum class LosClass
{
    los,
    nlos
};

inline const char *toString(LosClass c) { return c == LosClass::los ? "LOS" : "NLOS"; }

struct LocationMeasurement
{
    std::string id;
    std::optional<Vec3> tx_pos;
    std::optional<Vec3> rx_pos;
    double tr_distance_m = 0.0;
    LosClass los_class = LosClass::nlos;
    bool outage = false;
    std::vector<AngleRecord> records;

    bool operator==(const LocationMeasurement &) const = default;
};

struct Campaign
{
    double carrier_freq_hz = 0.0;
    double hpbw_az_deg = 0.0;
    double hpbw_el_deg = 0.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double max_path_loss_db = 0.0;
    std::optional<double> default_noise_floor; // fills PDPs that omit their own
    std::vector<LocationMeasurement> locations;

    bool operator==(const Campaign &) const = default;
};

// Knobs shared by every campaign-level pipeline.
struct AnalysisOptions
{
    double threshold_db = kDefaultThresholdDb;
    std::set<std::string> excluded; // location ids dropped explicitly by the caller
    std::optional<LosClass> los_class;

    bool selects(const LocationMeasurement &loc) const
    {
        return !excluded.contains(loc.id) && (!los_class || *los_class == loc.los_class);
    }
};

// ---- validation ---------------------------------------------------------

inline void validatePdp(const Pdp &pdp, const std::string &locus)
{
    if (!(pdp.bin_width_ns > 0.0) || !std::isfinite(pdp.bin_width_ns))
        throw ValidationError(locus + ".bin_width_ns", "must be > 0");
    if (!std::isfinite(pdp.start_delay_ns))
        throw ValidationError(locus + ".start_delay_ns", "must be finite");
    if (!(pdp.noise_floor > 0.0) || !std::isfinite(pdp.noise_floor))
        throw ValidationError(locus + ".noise_floor", "must be > 0");
    for (std::size_t k = 0; k < pdp.powers.size(); ++k)
        if (!(pdp.powers[k] >= 0.0) || !std::isfinite(pdp.powers[k]))
            throw ValidationError(locus + ".powers[" + std::to_string(k) + "]", "must be finite and >= 0");
}

inline void validateLocation(const LocationMeasurement &loc, const std::string &locus)
{
    if (loc.id.empty())
        throw ValidationError(locus + ".id", "must not be empty");
    if (!(loc.tr_distance_m > 0.0) || !std::isfinite(loc.tr_distance_m))
        throw ValidationError(locus + ".tr_distance_m", "must be > 0");
    if (loc.tx_pos && loc.rx_pos)
    {
        const double geometric = distance(*loc.tx_pos, *loc.rx_pos);
        if (std::abs(geometric - loc.tr_distance_m) > 0.01 * loc.tr_distance_m)
            throw ValidationError(locus + ".tr_distance_m", "disagrees with |tx_pos - rx_pos| = " +
                                                                std::to_string(geometric) + " by more than 1%");
    }
    if (loc.outage != loc.records.empty())
        throw ValidationError(locus + ".outage", loc.outage ? "outage location must not carry records"
                                                            : "non-outage location needs at least one record");
    for (std::size_t r = 0; r < loc.records.size(); ++r)
    {
        const auto &rec = loc.records[r];
        const std::string rl = locus + ".records[" + std::to_string(r) + "]";
        if (!(rec.azimuth_deg >= 0.0 && rec.azimuth_deg < 360.0))
            throw ValidationError(rl + ".azimuth_deg", "must lie in [0, 360)");
        if (!(rec.elevation_deg >= -90.0 && rec.elevation_deg <= 90.0))
            throw ValidationError(rl + ".elevation_deg", "must lie in [-90, 90]");
        validatePdp(rec.pdp, rl + ".pdp");
        for (std::size_t q = 0; q < r; ++q)
            if (loc.records[q].azimuth_deg == rec.azimuth_deg && loc.records[q].elevation_deg == rec.elevation_deg)
                throw ValidationError(rl, "duplicate (azimuth_deg, elevation_deg) pair within location");
    }
}

inline void validateCampaign(const Campaign &c)
{
    auto positive = [](double v, const char *field)
    {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError(field, "must be > 0");
    };
    positive(c.carrier_freq_hz, "carrier_freq_hz");
    positive(c.hpbw_az_deg, "hpbw_az_deg");
    positive(c.hpbw_el_deg, "hpbw_el_deg");
    positive(c.tx_gain_dbi, "tx_gain_dbi");
    positive(c.rx_gain_dbi, "rx_gain_dbi");
    if (!std::isfinite(c.tx_power_dbm))
        throw ValidationError("tx_power_dbm", "must be finite");
    positive(c.max_path_loss_db, "max_path_loss_db");
    if (c.default_noise_floor)
        positive(*c.default_noise_floor, "default_noise_floor");

    std::set<std::string> ids;
    for (std::size_t i = 0; i < c.locations.size(); ++i)
    {
        const std::string locus = "locations[" + std::to_string(i) + "]";
        validateLocation(c.locations[i], locus);
        if (!ids.insert(c.locations[i].id).second)
            throw ValidationError(locus + ".id", "duplicate location id '" + c.locations[i].id + "'");
    }
}

// ---- profile operations -------------------------------------------------

// Zero every bin below noise_floor * 10^(threshold_db/10). Bins are zeroed, never removed,
// so the delay axis is unchanged.
inline Pdp thresholdPdp(const Pdp &pdp, double threshold_db = kDefaultThresholdDb)
{
    if (!(threshold_db >= 0.0))
        throw DomainError("threshold_db must be >= 0");
    const double cutoff = pdp.noise_floor * std::pow(10.0, threshold_db / 10.0);
    Pdp out = pdp;
    for (double &p : out.powers)
        if (p < cutoff)
            p = 0.0;
    return out;
}

// Received power in mW: sum of density times bin width.
inline double totalPower(const Pdp &pdp)
{
    double sum = 0.0;
    for (double p : pdp.powers)
        sum += p;
    return sum * pdp.bin_width_ns;
}

inline bool hasPower(const Pdp &pdp)
{
    return std::any_of(pdp.powers.begin(), pdp.powers.end(), [](double p) { return p > 0.0; });
}

inline double mwToDbm(double mw) { return 10.0 * std::log10(mw); }
inline double dbmToMw(double dbm) { return std::pow(10.0, dbm / 10.0); }

// A detected beam of one location, after thresholding.
struct RankedBeam
{
    std::size_t record_index;
    double power_mw;
};

// Valid (non-empty after thresholding) records of a location ordered by descending total
// power; equal powers are ordered by ascending (azimuth, elevation).
inline std::vector<RankedBeam> rankBeams(const LocationMeasurement &loc, double threshold_db = kDefaultThresholdDb)
{
    std::vector<RankedBeam> beams;
    for (std::size_t r = 0; r < loc.records.size(); ++r)
    {
        const double p = totalPower(thresholdPdp(loc.records[r].pdp, threshold_db));
        if (p > 0.0)
            beams.push_back({r, p});
    }
    std::sort(beams.begin(), beams.end(), [&](const RankedBeam &a, const RankedBeam &b)
              {
                  if (a.power_mw != b.power_mw)
                      return a.power_mw > b.power_mw;
                  const auto &ra = loc.records[a.record_index], &rb = loc.records[b.record_index];
                  if (ra.azimuth_deg != rb.azimuth_deg)
                      return ra.azimuth_deg < rb.azimuth_deg;
                  return ra.elevation_deg < rb.elevation_deg; });
    return beams;
}

// A location has signal when at least one pointing angle survives thresholding.
inline bool hasSignal(const LocationMeasurement &loc, double threshold_db = kDefaultThresholdDb)
{
    if (loc.outage)
        return false;
    return std::any_of(loc.records.begin(), loc.records.end(),
                       [&](const AngleRecord &r) { return hasPower(thresholdPdp(r.pdp, threshold_db)); });
}

// ---- campaign summary (measured / with signal / outage) -----------------

struct GroupCount
{
    std::size_t count = 0;
    std::optional<double> min_distance_m;
    std::optional<double> max_distance_m;

    void add(double d)
    {
        ++count;
        min_distance_m = min_distance_m ? std::min(*min_distance_m, d) : d;
        max_distance_m = max_distance_m ? std::max(*max_distance_m, d) : d;
    }
};

struct ClassSummary
{
    GroupCount measured_within;
    GroupCount measured_all;
    GroupCount signal_within;
    GroupCount outage_within;
    GroupCount signal_all;
    GroupCount outage_all;
};

struct CampaignSummary
{
    double d_max_m = 200.0;
    ClassSummary los;
    ClassSummary nlos;

    const ClassSummary &of(LosClass c) const { return c == LosClass::los ? los : nlos; }
};

inline CampaignSummary summarizeCampaign(const Campaign &campaign, double d_max_m,
                                         const AnalysisOptions &opts = {})
{
    if (!(d_max_m > 0.0))
        throw DomainError("d_max_m must be > 0");
    CampaignSummary s;
    s.d_max_m = d_max_m;
    for (const auto &loc : campaign.locations)
    {
        if (!opts.selects(loc))
            continue;
        ClassSummary &cs = loc.los_class == LosClass::los ? s.los : s.nlos;
        const double d = loc.tr_distance_m;
        const bool signal = hasSignal(loc, opts.threshold_db);
        cs.measured_all.add(d);
        (signal ? cs.signal_all : cs.outage_all).add(d);
        if (d <= d_max_m)
        {
            cs.measured_within.add(d);
            (signal ? cs.signal_within : cs.outage_within).add(d);
        }
    }
    return s;
}

} // namespace mmwchan

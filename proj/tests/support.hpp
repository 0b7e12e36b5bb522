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
#include <string>
#include <vector>

#include "mmwchan.hpp"

namespace mmwchan::testing
{

inline Pdp makePdp(std::vector<double> powers, double bin_width_ns = 2.5, double start_delay_ns = 0.0,
                   double noise_floor = 1e-9)
{
    Pdp p;
    p.bin_width_ns = bin_width_ns;
    p.start_delay_ns = start_delay_ns;
    p.noise_floor = noise_floor;
    p.powers = std::move(powers);
    return p;
}

inline AngleRecord makeRecord(double az, double el, std::vector<double> powers, double noise_floor = 1e-9)
{
    AngleRecord r;
    r.azimuth_deg = az;
    r.elevation_deg = el;
    r.pdp = makePdp(std::move(powers), 2.5, 0.0, noise_floor);
    return r;
}

inline LocationMeasurement makeLocation(std::string id, double d, LosClass cls, std::vector<AngleRecord> records = {})
{
    LocationMeasurement loc;
    loc.id = std::move(id);
    loc.tr_distance_m = d;
    loc.los_class = cls;
    loc.records = std::move(records);
    loc.outage = loc.records.empty();
    return loc;
}

inline Campaign makeCampaign(std::vector<LocationMeasurement> locations = {}, const SounderPreset &s = kSounder28GHz)
{
    Campaign c;
    c.carrier_freq_hz = s.carrier_freq_hz;
    c.hpbw_az_deg = s.hpbw_az_deg;
    c.hpbw_el_deg = s.hpbw_el_deg;
    c.tx_power_dbm = s.tx_power_dbm;
    c.tx_gain_dbi = s.tx_gain_dbi;
    c.rx_gain_dbi = s.rx_gain_dbi;
    c.max_path_loss_db = s.max_path_loss_db;
    c.locations = std::move(locations);
    return c;
}

// Raw-moment delay spread on the absolute delay axis, in extended precision.
inline long double naiveRmsDelaySpread(const Pdp &p)
{
    long double w = 0, m1 = 0, m2 = 0;
    for (std::size_t k = 0; k < p.powers.size(); ++k)
    {
        const long double t = static_cast<long double>(p.start_delay_ns) + static_cast<long double>(k) * p.bin_width_ns;
        w += p.powers[k];
        m1 += p.powers[k] * t;
        m2 += p.powers[k] * t * t;
    }
    const long double mean = m1 / w;
    const long double var = m2 / w - mean * mean;
    return var > 0 ? std::sqrt(var) : 0.0L;
}

inline long double naiveMeanDelay(const Pdp &p)
{
    long double w = 0, m1 = 0;
    for (std::size_t k = 0; k < p.powers.size(); ++k)
    {
        w += p.powers[k];
        m1 += p.powers[k] * (static_cast<long double>(p.start_delay_ns) + static_cast<long double>(k) * p.bin_width_ns);
    }
    return m1 / w;
}

// Random profile with 1..max_bins bins, some zeroed, at least one non-zero.
inline Pdp randomPdp(Rng &rng, std::size_t max_bins = 16)
{
    const auto n = static_cast<std::size_t>(rng.uniformInt(1, static_cast<std::int64_t>(max_bins)));
    std::vector<double> p(n);
    for (auto &v : p)
        v = rng.uniform() < 0.25 ? 0.0 : rng.uniform(1e-3, 1.0);
    p[static_cast<std::size_t>(rng.uniformInt(0, static_cast<std::int64_t>(n) - 1))] = rng.uniform(0.5, 1.0);
    return makePdp(std::move(p));
}

inline Vec3 randomUnit(Rng &rng)
{
    const double z = rng.uniform(-1, 1), phi = rng.uniform(0, 2 * kPi);
    const double r = std::sqrt(1 - z * z);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

// Random rectangle of arbitrary orientation near the origin.
inline Facet randomFacet(Rng &rng)
{
    const Vec3 n = randomUnit(rng);
    const Vec3 helper = std::abs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 e1 = normalized(cross(n, helper));
    const Vec3 e2 = cross(n, e1);
    const Vec3 c{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-5, 10)};
    const double a = rng.uniform(2, 15), b = rng.uniform(2, 15);
    return Facet({c - e1 * a - e2 * b, c + e1 * a - e2 * b, c + e1 * a + e2 * b, c - e1 * a + e2 * b});
}

inline std::vector<double> lengths(const std::vector<RayPath> &paths)
{
    std::vector<double> v;
    for (const auto &p : paths)
        v.push_back(p.total_length_m);
    return v;
}

// Incidence and reflection angles against the facet normal at every bounce.
inline double reflectionResidual(const std::vector<Facet> &scene, const Vec3 &tx, const Vec3 &rx, const RayPath &p)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < p.reflection_points.size(); ++i)
    {
        const Vec3 q = p.reflection_points[i];
        const Vec3 prev = i == 0 ? tx : p.reflection_points[i - 1];
        const Vec3 next = i + 1 == p.reflection_points.size() ? rx : p.reflection_points[i + 1];
        Vec3 n = scene[p.facet_ids[i]].normal();
        if (dot(prev - q, n) < 0)
            n = -n;
        const double in = angleBetween(prev - q, n), out = angleBetween(next - q, n);
        worst = std::max(worst, std::abs(in - out));
        // incident ray, reflected ray and normal are coplanar
        worst = std::max(worst, std::abs(dot(normalized(cross(prev - q, n)), normalized(next - q))));
    }
    return worst;
}


} // namespace mmwchan::testing

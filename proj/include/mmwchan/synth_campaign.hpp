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
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "mmwchan/beam_combining.hpp"
#include "mmwchan/campaign.hpp"
#include "mmwchan/campaign_io.hpp"
#include "mmwchan/pathloss.hpp"
#include "mmwchan/random.hpp"
#include "mmwchan/raytrace.hpp"

namespace mmwchan
{

// Street canyon used when a generator configuration brings no scene: two 280 m building
// faces 30 m apart along the x axis, and three tall panels jutting into the street that
// shadow parts of it from a transmitter near the origin.
inline std::vector<Facet> streetCanyonScene()
{
    const double x0 = -20.0, x1 = 260.0, half_width = 15.0, wall_h = 40.0, panel_h = 30.0;
    auto wall = [&](double y) { return Facet({Vec3{x0, y, 0.0}, Vec3{x1, y, 0.0}, Vec3{x1, y, wall_h}, Vec3{x0, y, wall_h}}); };
    auto panel = [&](double x, double y_a, double y_b)
    { return Facet({Vec3{x, y_a, 0.0}, Vec3{x, y_b, 0.0}, Vec3{x, y_b, panel_h}, Vec3{x, y_a, panel_h}}); };
    return {wall(half_width), wall(-half_width), panel(70.0, -half_width, -2.0), panel(120.0, 2.0, half_width),
            panel(170.0, -half_width, -4.0)};
}

struct GeneratorConfig
{
    SounderPreset sounder = kSounder73GHz;
    std::optional<std::vector<Facet>> scene; // street canyon when absent
    Vec3 tx_pos{0.0, 0.0, kTxHeightLowM};
    std::vector<Vec3> rx_positions;          // explicit receivers; random placement when empty
    std::size_t num_locations = 40;
    double x_min_m = 30.0;                   // random receivers: along-street range
    double x_max_m = 200.0;
    double street_half_width_m = 13.0;       // random receivers: |y| bound

    double ple = 3.728;
    double shadow_sigma_db = 0.0;
    double reflection_loss_db = 0.0;         // extra loss per bounce

    std::size_t max_clusters = 4;
    std::size_t max_subpaths = 4;
    double subpath_decay_db_per_bin = 2.0;
    double subpath_floor_db = -15.0;         // weakest subpath relative to the cluster peak
    double dynamic_range_db = 30.0;          // peak density over noise floor
    std::size_t noise_records = 2;           // noise-only pointing angles per location
    std::size_t leading_bins = 8;
    std::size_t trailing_bins = 16;
    double bin_width_ns = kDefaultBinWidthNs;
    std::uint64_t seed = 42;
};

struct TruthCluster
{
    int order = 0;
    double path_length_m = 0.0;
    double delay_ns = 0.0; // absolute propagation delay
    Angles aoa;
    Angles beam;           // pointing angle of the record that captured the cluster
    double path_loss_db = 0.0;
    double power_mw = 0.0;
    std::vector<std::size_t> offsets_bins; // intra-cluster subpath positions
    std::vector<double> densities;         // mW/ns per subpath
    double mean_offset_ns = 0.0;           // intra-cluster power-weighted mean, from the first subpath
    double sigma_tau_ns = 0.0;             // intra-cluster RMS delay spread
};

struct TruthLocation
{
    std::string id;
    LosClass los_class = LosClass::nlos;
    bool outage = false;
    double tr_distance_m = 0.0;
    std::vector<TruthCluster> clusters; // strongest predicted first
    std::optional<double> strongest_sigma_tau_ns;
    std::optional<double> omni_first_arrival_ns;
    std::optional<double> omni_sigma_tau_ns;           // arrivals quantized as in synthesis
    std::optional<double> omni_sigma_tau_unquantized_ns;
    std::array<std::array<double, 4>, 2> combined_power_mw{}; // [coherent|noncoherent][k-1]
};

struct GroundTruth
{
    std::uint64_t seed = 0;
    double carrier_freq_hz = 0.0;
    double ple = 0.0;
    double shadow_sigma_db = 0.0;
    double reflection_loss_db = 0.0;
    // Noise-free close-in exponents per combining mode and beam count (k = 1..4), fitted
    // over all locations with signal.
    std::array<std::array<double, 4>, 2> reference_ple{};
    std::vector<TruthLocation> locations;
};

struct GeneratedCampaign
{
    Campaign campaign;
    GroundTruth truth;
    std::vector<Facet> scene;
};

inline void validateGeneratorConfig(const GeneratorConfig &g)
{
    auto require = [](bool ok, const char *field, const char *what)
    {
        if (!ok)
            throw ValidationError(field, what);
    };
    require(g.ple > 0.0 && std::isfinite(g.ple), "ple", "must be > 0");
    require(g.shadow_sigma_db >= 0.0, "shadow_sigma_db", "must be >= 0");
    require(g.reflection_loss_db >= 0.0, "reflection_loss_db", "must be >= 0");
    require(g.max_clusters >= 1 && g.max_clusters <= 4, "max_clusters", "must lie in [1, 4]");
    require(g.max_subpaths >= 1, "max_subpaths", "must be >= 1");
    require(g.subpath_floor_db <= 0.0, "subpath_floor_db", "must be <= 0");
    require(g.dynamic_range_db + g.subpath_floor_db > kDefaultThresholdDb + 3.0, "dynamic_range_db",
            "weakest subpath must clear the 5 dB threshold with 3 dB margin");
    require(g.bin_width_ns > 0.0, "bin_width_ns", "must be > 0");
    require(g.rx_positions.empty() ? g.num_locations >= 1 : true, "num_locations", "must be >= 1");
    require(g.x_min_m < g.x_max_m, "x_min_m", "must be < x_max_m");
    require(g.street_half_width_m >= 0.0, "street_half_width_m", "must be >= 0");
    require(g.sounder.carrier_freq_hz > 0.0, "sounder.carrier_freq_hz", "must be > 0");
}

namespace detail
{

inline double sectorCenter(double angle_deg, double width_deg)
{
    return std::round(angle_deg / width_deg) * width_deg;
}

// Noise-free least-squares close-in exponent.
inline double closeInExponent(const std::vector<std::pair<double, double>> &distance_pl, double anchor_db)
{
    double sxy = 0.0, sxx = 0.0;
    for (const auto &[d, pl] : distance_pl)
    {
        const double x = 10.0 * std::log10(d);
        sxy += (pl - anchor_db) * x;
        sxx += x * x;
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

} // namespace detail

// Synthetic campaign with known ground truth.
//
// Every receiver is traced through the scene; the strongest predicted specular paths
// become clusters, each captured by exactly one boxcar beam of the sounder's HPBW.
// Clusters closer than the beam can resolve to any other predicted path are dropped, so
// every surviving beam points unambiguously at its own path. Cluster power follows the
// close-in model at the T-R distance, plus a per-bounce loss and log-normal shadowing;
// clusters beyond the maximum measurable path loss go undetected. Intra-cluster profiles
// are a few exponentially decaying subpaths; unoccupied bins carry noise below the 5 dB
// threshold.
inline GeneratedCampaign generateCampaign(const GeneratorConfig &cfg)
{
    validateGeneratorConfig(cfg);
    Rng rng(cfg.seed);
    const auto &snd = cfg.sounder;
    const double bw = cfg.bin_width_ns;
    const double anchor = fsplAtRef(snd.carrier_freq_hz);
    const double eirp_gain = snd.tx_power_dbm + snd.tx_gain_dbi + snd.rx_gain_dbi;
    const double separation_deg = 2.0 * std::hypot(snd.hpbw_az_deg / 2.0, snd.hpbw_el_deg / 2.0) + 2.0;
    const double noise_ceiling = 2.0; // noise bins stay below 2x the floor, under the 5 dB cutoff

    GeneratedCampaign out;
    out.scene = cfg.scene ? *cfg.scene : streetCanyonScene();
    Campaign &c = out.campaign;
    c.carrier_freq_hz = snd.carrier_freq_hz;
    c.hpbw_az_deg = snd.hpbw_az_deg;
    c.hpbw_el_deg = snd.hpbw_el_deg;
    c.tx_power_dbm = snd.tx_power_dbm;
    c.tx_gain_dbi = snd.tx_gain_dbi;
    c.rx_gain_dbi = snd.rx_gain_dbi;
    c.max_path_loss_db = snd.max_path_loss_db;

    GroundTruth &gt = out.truth;
    gt.seed = cfg.seed;
    gt.carrier_freq_hz = snd.carrier_freq_hz;
    gt.ple = cfg.ple;
    gt.shadow_sigma_db = cfg.shadow_sigma_db;
    gt.reflection_loss_db = cfg.reflection_loss_db;

    // noise-free per-location path losses for the reference exponents
    std::array<std::array<std::vector<std::pair<double, double>>, 4>, 2> reference_pl;

    const std::size_t n_loc = cfg.rx_positions.empty() ? cfg.num_locations : cfg.rx_positions.size();
    for (std::size_t i = 0; i < n_loc; ++i)
    {
        Vec3 rx;
        if (cfg.rx_positions.empty())
            rx = {rng.uniform(cfg.x_min_m, cfg.x_max_m),
                  rng.uniform(-cfg.street_half_width_m, cfg.street_half_width_m), snd.rx_height_m};
        else
            rx = cfg.rx_positions[i];

        char id[32];
        std::snprintf(id, sizeof id, "L%03zu", i + 1);
        LocationMeasurement loc;
        loc.id = id;
        loc.tx_pos = cfg.tx_pos;
        loc.rx_pos = rx;
        loc.tr_distance_m = distance(cfg.tx_pos, rx);

        TruthLocation tl;
        tl.id = loc.id;
        tl.tr_distance_m = loc.tr_distance_m;

        const auto paths = tracePaths(out.scene, cfg.tx_pos, rx, kMaxReflectionOrder);
        loc.los_class = (!paths.empty() && paths.front().order() == 0) ? LosClass::los : LosClass::nlos;
        tl.los_class = loc.los_class;
        const auto predicted = predictStrongestAoas(paths, cfg.max_clusters);

        std::vector<double> noise_free_mw;
        for (std::size_t p = 0; p < predicted.size(); ++p)
        {
            bool resolvable = true;
            for (std::size_t q = 0; q < predicted.size(); ++q)
                if (q != p && angularDistanceDeg(predicted[p].aoa, predicted[q].aoa) < separation_deg)
                    resolvable = false;
            const double shadow = cfg.shadow_sigma_db * rng.normal();
            if (!resolvable)
                continue;

            TruthCluster cl;
            cl.order = predicted[p].order;
            cl.path_length_m = predicted[p].length_m;
            cl.delay_ns = predicted[p].delay_ns;
            cl.aoa = predicted[p].aoa;
            const double mean_pl =
                anchor + 10.0 * cfg.ple * std::log10(loc.tr_distance_m) + cfg.reflection_loss_db * cl.order;
            cl.path_loss_db = mean_pl + shadow;
            if (cl.path_loss_db > snd.max_path_loss_db)
                continue;
            cl.power_mw = dbmToMw(eirp_gain - cl.path_loss_db);
            noise_free_mw.push_back(dbmToMw(eirp_gain - mean_pl));
            cl.beam = {normalizeAzimuth(detail::sectorCenter(cl.aoa.azimuth_deg, snd.hpbw_az_deg)),
                       std::clamp(detail::sectorCenter(cl.aoa.elevation_deg, snd.hpbw_el_deg), -90.0, 90.0)};

            const auto n_sub = static_cast<std::size_t>(rng.uniformInt(1, static_cast<std::int64_t>(cfg.max_subpaths)));
            std::vector<double> rel;
            std::size_t offset = 0;
            for (std::size_t s = 0; s < n_sub; ++s)
            {
                if (s > 0)
                    offset += static_cast<std::size_t>(rng.uniformInt(1, 3));
                const double rel_db =
                    s == 0 ? 0.0
                           : std::max(cfg.subpath_floor_db,
                                      -cfg.subpath_decay_db_per_bin * static_cast<double>(offset) - rng.uniform(0.0, 3.0));
                cl.offsets_bins.push_back(offset);
                rel.push_back(std::pow(10.0, rel_db / 10.0));
            }
            double rel_sum = 0.0;
            for (double r : rel)
                rel_sum += r;
            double m1 = 0.0;
            for (std::size_t s = 0; s < rel.size(); ++s)
            {
                cl.densities.push_back(cl.power_mw * rel[s] / (rel_sum * bw));
                m1 += rel[s] * static_cast<double>(cl.offsets_bins[s]) * bw;
            }
            cl.mean_offset_ns = m1 / rel_sum;
            double var = 0.0;
            for (std::size_t s = 0; s < rel.size(); ++s)
            {
                const double dt = static_cast<double>(cl.offsets_bins[s]) * bw - cl.mean_offset_ns;
                var += rel[s] * dt * dt;
            }
            cl.sigma_tau_ns = std::sqrt(var / rel_sum);
            tl.clusters.push_back(std::move(cl));
        }

        // one record per cluster
        double strongest_noise = 0.0;
        for (const auto &cl : tl.clusters)
        {
            AngleRecord rec;
            rec.azimuth_deg = cl.beam.azimuth_deg;
            rec.elevation_deg = cl.beam.elevation_deg;
            rec.boresight = cl.order == 0;
            rec.pdp.bin_width_ns = bw;
            rec.pdp.start_delay_ns = 0.0;
            const double peak = *std::max_element(cl.densities.begin(), cl.densities.end());
            rec.pdp.noise_floor = peak / std::pow(10.0, cfg.dynamic_range_db / 10.0);
            strongest_noise = std::max(strongest_noise, rec.pdp.noise_floor);
            const std::size_t n_bins = cfg.leading_bins + cl.offsets_bins.back() + 1 + cfg.trailing_bins;
            rec.pdp.powers.resize(n_bins);
            for (double &p : rec.pdp.powers)
                p = rng.uniform(0.0, noise_ceiling) * rec.pdp.noise_floor;
            for (std::size_t s = 0; s < cl.densities.size(); ++s)
                rec.pdp.powers[cfg.leading_bins + cl.offsets_bins[s]] = cl.densities[s];
            loc.records.push_back(std::move(rec));
        }

        if (loc.records.empty())
        {
            loc.outage = true;
            tl.outage = true;
        }
        else
        {
            // noise-only pointing angles in unoccupied azimuth sectors
            const auto n_sectors = static_cast<std::int64_t>(std::floor(360.0 / snd.hpbw_az_deg));
            for (std::size_t extra = 0, attempts = 0; extra < cfg.noise_records && attempts < 64; ++attempts)
            {
                const double az = static_cast<double>(rng.uniformInt(0, n_sectors - 1)) * snd.hpbw_az_deg;
                const Angles dir{az, 0.0};
                const bool clash = std::any_of(loc.records.begin(), loc.records.end(), [&](const AngleRecord &r)
                                               { return angularDistanceDeg(r.angles(), dir) < snd.hpbw_az_deg; });
                if (clash)
                    continue;
                AngleRecord rec;
                rec.azimuth_deg = az;
                rec.elevation_deg = 0.0;
                rec.pdp.bin_width_ns = bw;
                rec.pdp.noise_floor = strongest_noise;
                rec.pdp.powers.resize(cfg.leading_bins + cfg.trailing_bins);
                for (double &p : rec.pdp.powers)
                    p = rng.uniform(0.0, noise_ceiling) * rec.pdp.noise_floor;
                loc.records.push_back(std::move(rec));
                ++extra;
            }
            std::sort(loc.records.begin(), loc.records.end(), [](const AngleRecord &a, const AngleRecord &b)
                      { return a.azimuth_deg != b.azimuth_deg ? a.azimuth_deg < b.azimuth_deg
                                                              : a.elevation_deg < b.elevation_deg; });

            // strongest beam, combined powers
            std::vector<double> powers, noise_free_sorted = noise_free_mw;
            std::size_t strongest = 0;
            for (std::size_t k = 0; k < tl.clusters.size(); ++k)
            {
                powers.push_back(tl.clusters[k].power_mw);
                if (tl.clusters[k].power_mw > tl.clusters[strongest].power_mw)
                    strongest = k;
            }
            tl.strongest_sigma_tau_ns = tl.clusters[strongest].sigma_tau_ns;
            std::sort(powers.begin(), powers.end(), std::greater<>());
            std::sort(noise_free_sorted.begin(), noise_free_sorted.end(), std::greater<>());
            for (std::size_t k = 1; k <= 4; ++k)
            {
                const std::size_t m = std::min(k, powers.size());
                double s = 0.0, amp = 0.0, s0 = 0.0, amp0 = 0.0;
                for (std::size_t j = 0; j < m; ++j)
                {
                    s += powers[j];
                    amp += std::sqrt(powers[j]);
                    s0 += noise_free_sorted[j];
                    amp0 += std::sqrt(noise_free_sorted[j]);
                }
                tl.combined_power_mw[0][k - 1] = amp * amp;
                tl.combined_power_mw[1][k - 1] = s;
                reference_pl[0][k - 1].push_back({loc.tr_distance_m, eirp_gain - 10.0 * std::log10(amp0 * amp0)});
                reference_pl[1][k - 1].push_back({loc.tr_distance_m, eirp_gain - 10.0 * std::log10(s0)});
            }

            // omnidirectional truth: every cluster on the absolute axis
            double origin = tl.clusters.front().delay_ns;
            for (const auto &cl : tl.clusters)
                origin = std::min(origin, cl.delay_ns);
            tl.omni_first_arrival_ns = origin;
            double total = 0.0;
            for (const auto &cl : tl.clusters)
                total += cl.power_mw;
            auto mixtureSigma = [&](bool quantized)
            {
                double mean = 0.0;
                std::vector<double> centers;
                for (const auto &cl : tl.clusters)
                {
                    const double shift = quantized ? std::llround((cl.delay_ns - origin) / bw) * bw : cl.delay_ns - origin;
                    centers.push_back(shift + cl.mean_offset_ns);
                    mean += cl.power_mw / total * centers.back();
                }
                double var = 0.0;
                for (std::size_t k = 0; k < tl.clusters.size(); ++k)
                {
                    const auto &cl = tl.clusters[k];
                    var += cl.power_mw / total *
                           (cl.sigma_tau_ns * cl.sigma_tau_ns + (centers[k] - mean) * (centers[k] - mean));
                }
                return std::sqrt(var);
            };
            tl.omni_sigma_tau_ns = mixtureSigma(true);
            tl.omni_sigma_tau_unquantized_ns = mixtureSigma(false);
        }
        c.locations.push_back(std::move(loc));
        gt.locations.push_back(std::move(tl));
    }

    for (std::size_t mode = 0; mode < 2; ++mode)
        for (std::size_t k = 0; k < 4; ++k)
            gt.reference_ple[mode][k] = detail::closeInExponent(reference_pl[mode][k], anchor);

    validateCampaign(c);
    return out;
}

inline std::string serializeGroundTruth(const GroundTruth &gt)
{
    using detail::Json;
    auto angles = [](const Angles &a) { return Json::array({a.azimuth_deg, a.elevation_deg}); };
    auto opt = [](const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); };
    auto perMode = [](const std::array<std::array<double, 4>, 2> &v)
    {
        Json j = Json::object();
        j["coherent"] = Json::array({v[0][0], v[0][1], v[0][2], v[0][3]});
        j["noncoherent"] = Json::array({v[1][0], v[1][1], v[1][2], v[1][3]});
        return j;
    };
    Json doc = Json::object();
    doc["seed"] = gt.seed;
    doc["carrier_freq_hz"] = gt.carrier_freq_hz;
    doc["ple"] = gt.ple;
    doc["shadow_sigma_db"] = gt.shadow_sigma_db;
    doc["reflection_loss_db"] = gt.reflection_loss_db;
    doc["reference_ple"] = perMode(gt.reference_ple);
    Json locs = Json::array();
    for (const auto &tl : gt.locations)
    {
        Json l = Json::object();
        l["id"] = tl.id;
        l["los_class"] = toString(tl.los_class);
        l["outage"] = tl.outage;
        l["tr_distance_m"] = tl.tr_distance_m;
        Json clusters = Json::array();
        for (const auto &cl : tl.clusters)
        {
            Json c = Json::object();
            c["order"] = cl.order;
            c["path_length_m"] = cl.path_length_m;
            c["delay_ns"] = cl.delay_ns;
            c["aoa_deg"] = angles(cl.aoa);
            c["beam_deg"] = angles(cl.beam);
            c["path_loss_db"] = cl.path_loss_db;
            c["power_mw"] = cl.power_mw;
            c["offsets_bins"] = cl.offsets_bins;
            c["densities_mw_per_ns"] = cl.densities;
            c["sigma_tau_ns"] = cl.sigma_tau_ns;
            clusters.push_back(std::move(c));
        }
        l["clusters"] = std::move(clusters);
        l["strongest_sigma_tau_ns"] = opt(tl.strongest_sigma_tau_ns);
        l["omni_first_arrival_ns"] = opt(tl.omni_first_arrival_ns);
        l["omni_sigma_tau_ns"] = opt(tl.omni_sigma_tau_ns);
        l["omni_sigma_tau_unquantized_ns"] = opt(tl.omni_sigma_tau_unquantized_ns);
        l["combined_power_mw"] = perMode(tl.combined_power_mw);
        locs.push_back(std::move(l));
    }
    doc["locations"] = std::move(locs);
    return doc.dump(1) + "\n";
}

} // namespace mmwchan

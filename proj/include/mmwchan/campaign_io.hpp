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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmwchan/campaign.hpp"

namespace mmwchan
{

namespace detail
{

using Json = nlohmann::ordered_json;

// Line number (1-based) of a byte offset in `text`.
inline std::size_t lineOf(const std::string &text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

inline Json parseDocument(const std::string &text, const std::string &source)
{
    try
    {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(e.what(), source + ":" + std::to_string(lineOf(text, e.byte)));
    }
}

inline std::string readFile(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const Json &require(const Json &obj, const char *key, const std::string &locus)
{
    if (!obj.is_object())
        throw ParseError("expected an object", locus);
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing field '") + key + "'", locus);
    return *it;
}

inline double number(const Json &v, const std::string &locus)
{
    if (!v.is_number())
        throw ParseError("expected a number", locus);
    return v.get<double>();
}

inline double numberField(const Json &obj, const char *key, const std::string &locus)
{
    return number(require(obj, key, locus), locus + "." + key);
}

inline std::optional<double> optionalNumber(const Json &obj, const char *key, const std::string &locus)
{
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return std::nullopt;
    return number(*it, locus + "." + key);
}

inline Vec3 vec3(const Json &v, const std::string &locus)
{
    if (!v.is_array() || v.size() != 3)
        throw ParseError("expected [x, y, z]", locus);
    return {number(v[0], locus + "[0]"), number(v[1], locus + "[1]"), number(v[2], locus + "[2]")};
}

inline Json toJson(const Vec3 &p) { return Json::array({p.x, p.y, p.z}); }

inline LosClass losClass(const Json &v, const std::string &locus)
{
    if (v.is_string())
    {
        const auto s = v.get<std::string>();
        if (s == "LOS" || s == "los")
            return LosClass::los;
        if (s == "NLOS" || s == "nlos")
            return LosClass::nlos;
    }
    throw ParseError("los_class must be \"LOS\" or \"NLOS\"", locus);
}

inline bool boolean(const Json &v, const std::string &locus)
{
    if (!v.is_boolean())
        throw ParseError("expected true/false", locus);
    return v.get<bool>();
}

} // namespace detail

// Parse a campaign document. Azimuths outside [0, 360) are wrapped and reported through
// `warnings`; every other invariant violation throws ValidationError.
inline Campaign parseCampaign(const std::string &text, const std::string &source = "<campaign>",
                              std::vector<std::string> *warnings = nullptr)
{
    using namespace detail;
    const Json doc = parseDocument(text, source);
    if (!doc.is_object())
        throw ParseError("top level must be an object", source);

    Campaign c;
    c.carrier_freq_hz = numberField(doc, "carrier_freq_hz", source);
    c.hpbw_az_deg = numberField(doc, "hpbw_az_deg", source);
    c.hpbw_el_deg = numberField(doc, "hpbw_el_deg", source);
    c.tx_power_dbm = numberField(doc, "tx_power_dbm", source);
    c.tx_gain_dbi = numberField(doc, "tx_gain_dbi", source);
    c.rx_gain_dbi = numberField(doc, "rx_gain_dbi", source);
    c.max_path_loss_db = numberField(doc, "max_path_loss_db", source);
    c.default_noise_floor = optionalNumber(doc, "default_noise_floor", source);

    const Json &locs = require(doc, "locations", source);
    if (!locs.is_array())
        throw ParseError("expected an array", "locations");
    for (std::size_t i = 0; i < locs.size(); ++i)
    {
        const std::string ll = "locations[" + std::to_string(i) + "]";
        const Json &jl = locs[i];
        LocationMeasurement loc;
        const Json &id = require(jl, "id", ll);
        if (!id.is_string())
            throw ParseError("expected a string", ll + ".id");
        loc.id = id.get<std::string>();
        if (auto it = jl.find("tx_pos"); it != jl.end() && !it->is_null())
            loc.tx_pos = vec3(*it, ll + ".tx_pos");
        if (auto it = jl.find("rx_pos"); it != jl.end() && !it->is_null())
            loc.rx_pos = vec3(*it, ll + ".rx_pos");
        loc.tr_distance_m = numberField(jl, "tr_distance_m", ll);
        loc.los_class = losClass(require(jl, "los_class", ll), ll + ".los_class");
        loc.outage = boolean(require(jl, "outage", ll), ll + ".outage");

        const Json &recs = require(jl, "records", ll);
        if (!recs.is_array())
            throw ParseError("expected an array", ll + ".records");
        for (std::size_t r = 0; r < recs.size(); ++r)
        {
            const std::string rl = ll + ".records[" + std::to_string(r) + "]";
            const Json &jr = recs[r];
            AngleRecord rec;
            const double az = numberField(jr, "azimuth_deg", rl);
            rec.azimuth_deg = normalizeAzimuth(az);
            if (rec.azimuth_deg != az && warnings)
                warnings->push_back(rl + ".azimuth_deg: " + std::to_string(az) + " normalized to " +
                                    std::to_string(rec.azimuth_deg));
            rec.elevation_deg = numberField(jr, "elevation_deg", rl);
            if (auto it = jr.find("boresight"); it != jr.end())
                rec.boresight = boolean(*it, rl + ".boresight");

            const std::string pl = rl + ".pdp";
            const Json &jp = require(jr, "pdp", rl);
            rec.pdp.bin_width_ns = optionalNumber(jp, "bin_width_ns", pl).value_or(kDefaultBinWidthNs);
            rec.pdp.start_delay_ns = numberField(jp, "start_delay_ns", pl);
            auto nf = optionalNumber(jp, "noise_floor", pl);
            if (!nf)
                nf = c.default_noise_floor;
            if (!nf)
                throw ValidationError(pl + ".noise_floor", "missing and no campaign default_noise_floor");
            rec.pdp.noise_floor = *nf;
            const Json &jpow = require(jp, "powers", pl);
            if (!jpow.is_array())
                throw ParseError("expected an array", pl + ".powers");
            rec.pdp.powers.reserve(jpow.size());
            for (std::size_t k = 0; k < jpow.size(); ++k)
                rec.pdp.powers.push_back(number(jpow[k], pl + ".powers[" + std::to_string(k) + "]"));
            loc.records.push_back(std::move(rec));
        }
        c.locations.push_back(std::move(loc));
    }
    validateCampaign(c);
    return c;
}

inline Campaign loadCampaign(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr)
{
    return parseCampaign(detail::readFile(path), path.string(), warnings);
}

// Serialize with a fixed key order and shortest round-trip number formatting, so equal
// campaigns always produce identical bytes.
inline std::string serializeCampaign(const Campaign &c)
{
    using detail::Json;
    Json doc;
    doc["carrier_freq_hz"] = c.carrier_freq_hz;
    doc["hpbw_az_deg"] = c.hpbw_az_deg;
    doc["hpbw_el_deg"] = c.hpbw_el_deg;
    doc["tx_power_dbm"] = c.tx_power_dbm;
    doc["tx_gain_dbi"] = c.tx_gain_dbi;
    doc["rx_gain_dbi"] = c.rx_gain_dbi;
    doc["max_path_loss_db"] = c.max_path_loss_db;
    if (c.default_noise_floor)
        doc["default_noise_floor"] = *c.default_noise_floor;
    Json locs = Json::array();
    for (const auto &loc : c.locations)
    {
        Json jl;
        jl["id"] = loc.id;
        if (loc.tx_pos)
            jl["tx_pos"] = detail::toJson(*loc.tx_pos);
        if (loc.rx_pos)
            jl["rx_pos"] = detail::toJson(*loc.rx_pos);
        jl["tr_distance_m"] = loc.tr_distance_m;
        jl["los_class"] = toString(loc.los_class);
        jl["outage"] = loc.outage;
        Json recs = Json::array();
        for (const auto &rec : loc.records)
        {
            Json jr;
            jr["azimuth_deg"] = rec.azimuth_deg;
            jr["elevation_deg"] = rec.elevation_deg;
            jr["boresight"] = rec.boresight;
            Json jp;
            jp["bin_width_ns"] = rec.pdp.bin_width_ns;
            jp["start_delay_ns"] = rec.pdp.start_delay_ns;
            jp["noise_floor"] = rec.pdp.noise_floor;
            jp["powers"] = rec.pdp.powers;
            jr["pdp"] = std::move(jp);
            recs.push_back(std::move(jr));
        }
        jl["records"] = std::move(recs);
        locs.push_back(std::move(jl));
    }
    doc["locations"] = std::move(locs);
    return doc.dump(1) + "\n";
}

inline void saveCampaign(const Campaign &c, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << serializeCampaign(c);
}

} // namespace mmwchan

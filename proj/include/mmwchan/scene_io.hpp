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
#include <string>
#include <vector>

#include "mmwchan/campaign_io.hpp"
#include "mmwchan/raytrace.hpp"

namespace mmwchan
{

// Scene document: {"facets": [{"vertices": [[x,y,z], [x,y,z], [x,y,z], [x,y,z]]}, ...]}
inline std::vector<Facet> parseScene(const std::string &text, const std::string &source = "<scene>")
{
    using namespace detail;
    const Json doc = parseDocument(text, source);
    const Json &facets = require(doc, "facets", source);
    if (!facets.is_array())
        throw ParseError("expected an array", "facets");
    std::vector<Facet> scene;
    scene.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        const std::string fl = "facets[" + std::to_string(i) + "]";
        const Json &jv = require(facets[i], "vertices", fl);
        if (!jv.is_array() || jv.size() != 4)
            throw ParseError("expected four vertices", fl + ".vertices");
        std::array<Vec3, 4> v;
        for (std::size_t k = 0; k < 4; ++k)
            v[k] = vec3(jv[k], fl + ".vertices[" + std::to_string(k) + "]");
        try
        {
            scene.emplace_back(v);
        }
        catch (const ValidationError &e)
        {
            throw ValidationError(fl, e.what());
        }
    }
    return scene;
}

inline std::vector<Facet> loadScene(const std::filesystem::path &path)
{
    return parseScene(detail::readFile(path), path.string());
}

inline std::string serializeScene(std::span<const Facet> scene)
{
    using detail::Json;
    Json facets = Json::array();
    for (const auto &f : scene)
    {
        Json v = Json::array();
        for (const auto &p : f.vertices())
            v.push_back(detail::toJson(p));
        Json jf;
        jf["vertices"] = std::move(v);
        facets.push_back(std::move(jf));
    }
    Json doc;
    doc["facets"] = std::move(facets);
    return doc.dump(1) + "\n";
}

} // namespace mmwchan

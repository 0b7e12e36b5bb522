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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmwchan/constants.hpp"
#include "mmwchan/errors.hpp"
#include "mmwchan/geometry.hpp"

namespace mmwchan
{

// Point-in-facet, plane-side and intersection tolerance (m).
inline constexpr double kGeomEpsM = 1e-6;

// Flat loss charged per specular bounce when ranking traced paths (dB).
inline constexpr double kReflectionPenaltyDb = 10.0;

// Highest reflection order the tracer enumerates.
inline constexpr int kMaxReflectionOrder = 2;

// Planar rectangular reflector given by four vertices in order around the boundary.
class Facet
{
public:
    explicit Facet(const std::array<Vec3, 4> &v) : v_(v)
    {
        e1_ = v[1] - v[0];
        e2_ = v[3] - v[0];
        len1_ = norm(e1_);
        len2_ = norm(e2_);
        const Vec3 c = cross(e1_, e2_);
        const double area = norm(c);
        if (!(len1_ > kGeomEpsM) || !(len2_ > kGeomEpsM) || !(area > kGeomEpsM * std::max(len1_, len2_)))
            throw ValidationError("facet", "degenerate facet (zero area)");
        n_ = c * (1.0 / area);
        if (std::abs(dot(v[2] - v[0], n_)) > kGeomEpsM)
            throw ValidationError("facet", "vertices are not coplanar");
        if (distance(v[2], v[1] + e2_) > kGeomEpsM || std::abs(dot(e1_, e2_)) > kGeomEpsM * len1_ * len2_)
            throw ValidationError("facet", "vertices do not form a rectangle");
    }

    const std::array<Vec3, 4> &vertices() const { return v_; }
    const Vec3 &normal() const { return n_; }
    const Vec3 &origin() const { return v_[0]; }

    // Signed distance of p from the facet plane.
    double side(const Vec3 &p) const { return dot(p - v_[0], n_); }

    // p within kGeomEpsM of the facet rectangle (boundary included).
    bool contains(const Vec3 &p) const
    {
        if (std::abs(side(p)) > kGeomEpsM)
            return false;
        const Vec3 r = p - v_[0];
        const double s = dot(r, e1_) / len1_;
        const double t = dot(r, e2_) / len2_;
        return s >= -kGeomEpsM && s <= len1_ + kGeomEpsM && t >= -kGeomEpsM && t <= len2_ + kGeomEpsM;
    }

    Vec3 mirror(const Vec3 &p) const { return mirrorPoint(p, v_[0], n_); }

    // Point where segment a->b crosses the plane, when a and b lie strictly on opposite sides.
    std::optional<Vec3> crossing(const Vec3 &a, const Vec3 &b) const
    {
        const double sa = side(a), sb = side(b);
        if (!(sa * sb < 0.0) || std::abs(sa) <= kGeomEpsM || std::abs(sb) <= kGeomEpsM)
            return std::nullopt;
        const double t = sa / (sa - sb);
        return a + (b - a) * t;
    }

    // Segment a->b passes through the facet away from both endpoints.
    bool blocks(const Vec3 &a, const Vec3 &b) const
    {
        const Vec3 d = b - a;
        const double len = norm(d);
        const double denom = dot(n_, d);
        if (std::abs(denom) <= 1e-12 * len)
            return false; // parallel to the plane
        const double t = dot(n_, v_[0] - a) / denom;
        if (t * len <= kGeomEpsM || (1.0 - t) * len <= kGeomEpsM)
            return false;
        return contains(a + d * t);
    }

private:
    std::array<Vec3, 4> v_;
    Vec3 e1_, e2_, n_;
    double len1_ = 0.0, len2_ = 0.0;
};

struct RayPath
{
    std::vector<Vec3> reflection_points;
    std::vector<std::size_t> facet_ids; // scene index of each reflecting facet, in bounce order
    double total_length_m = 0.0;
    Angles aod; // departure direction at the TX
    Angles aoa; // direction from the RX back toward the last interaction point
    double delay_ns = 0.0;

    int order() const { return static_cast<int>(reflection_points.size()); }
};

namespace detail
{

inline bool segmentClear(std::span<const Facet> scene, const Vec3 &a, const Vec3 &b, std::size_t skip_a,
                         std::size_t skip_b)
{
    for (std::size_t f = 0; f < scene.size(); ++f)
    {
        if (f == skip_a || f == skip_b)
            continue;
        if (scene[f].blocks(a, b))
            return false;
    }
    return true;
}

inline constexpr std::size_t kNoFacet = static_cast<std::size_t>(-1);

inline RayPath makePath(const Vec3 &tx, const Vec3 &rx, std::vector<Vec3> points, std::vector<std::size_t> ids)
{
    RayPath p;
    Vec3 prev = tx;
    double len = 0.0;
    for (const auto &q : points)
    {
        len += distance(prev, q);
        prev = q;
    }
    len += distance(prev, rx);
    p.aod = directionAngles((points.empty() ? rx : points.front()) - tx);
    p.aoa = directionAngles((points.empty() ? tx : points.back()) - rx);
    p.total_length_m = len;
    p.delay_ns = len / kSpeedOfLight * 1e9;
    p.reflection_points = std::move(points);
    p.facet_ids = std::move(ids);
    return p;
}

} // namespace detail

// Specular paths from tx to rx by the image method, up to max_order bounces (<= 2).
// Each reflected path is kept only if every bounce point lies on its facet and no leg is
// occluded by another facet. Paths come back sorted by length (then order, then facets).
inline std::vector<RayPath> tracePaths(std::span<const Facet> scene, const Vec3 &tx, const Vec3 &rx,
                                       int max_order = kMaxReflectionOrder)
{
    using detail::kNoFacet;
    if (max_order < 0 || max_order > kMaxReflectionOrder)
        throw DomainError("reflection order must lie in [0, 2]");
    if (distance(tx, rx) <= kGeomEpsM)
        throw DomainError("tx and rx coincide");

    std::vector<RayPath> paths;
    if (detail::segmentClear(scene, tx, rx, kNoFacet, kNoFacet))
        paths.push_back(detail::makePath(tx, rx, {}, {}));

    if (max_order >= 1)
    {
        for (std::size_t f = 0; f < scene.size(); ++f)
        {
            const Facet &fa = scene[f];
            // tx and rx on the same (reflecting) side <=> image and rx on opposite sides
            const auto q = fa.crossing(fa.mirror(tx), rx);
            if (!q || !fa.contains(*q))
                continue;
            if (!detail::segmentClear(scene, tx, *q, f, kNoFacet) || !detail::segmentClear(scene, *q, rx, f, kNoFacet))
                continue;
            paths.push_back(detail::makePath(tx, rx, {*q}, {f}));
        }
    }

    if (max_order >= 2)
    {
        for (std::size_t f1 = 0; f1 < scene.size(); ++f1)
        {
            const Vec3 img1 = scene[f1].mirror(tx);
            for (std::size_t f2 = 0; f2 < scene.size(); ++f2)
            {
                if (f2 == f1)
                    continue;
                const Vec3 img2 = scene[f2].mirror(img1);
                const auto q2 = scene[f2].crossing(img2, rx);
                if (!q2 || !scene[f2].contains(*q2))
                    continue;
                const auto q1 = scene[f1].crossing(img1, *q2);
                if (!q1 || !scene[f1].contains(*q1))
                    continue;
                if (distance(*q1, *q2) <= kGeomEpsM)
                    continue;
                if (!detail::segmentClear(scene, tx, *q1, f1, kNoFacet) ||
                    !detail::segmentClear(scene, *q1, *q2, f1, f2) ||
                    !detail::segmentClear(scene, *q2, rx, f2, kNoFacet))
                    continue;
                paths.push_back(detail::makePath(tx, rx, {*q1, *q2}, {f1, f2}));
            }
        }
    }

    std::stable_sort(paths.begin(), paths.end(), [](const RayPath &a, const RayPath &b)
                     {
                         if (a.total_length_m != b.total_length_m)
                             return a.total_length_m < b.total_length_m;
                         if (a.order() != b.order())
                             return a.order() < b.order();
                         return a.facet_ids < b.facet_ids; });
    return paths;
}

struct PredictedArrival
{
    Angles aoa;
    double delay_ns = 0.0;
    double length_m = 0.0;
    int order = 0;
    std::size_t path_index = 0; // position in the tracePaths result
};

// Relative predicted strength (dB): free-space spreading 1/L^2 plus a flat penalty per bounce.
inline double predictedStrengthDb(const RayPath &p)
{
    return -20.0 * std::log10(p.total_length_m) - kReflectionPenaltyDb * p.order();
}

// Up to `limit` arrivals, strongest first by predictedStrengthDb.
inline std::vector<PredictedArrival> predictStrongestAoas(std::span<const RayPath> paths, std::size_t limit = 4)
{
    std::vector<std::size_t> idx(paths.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                     {
                         const double sa = predictedStrengthDb(paths[a]), sb = predictedStrengthDb(paths[b]);
                         if (sa != sb)
                             return sa > sb;
                         return paths[a].order() < paths[b].order(); });
    std::vector<PredictedArrival> out;
    for (std::size_t i = 0; i < idx.size() && out.size() < limit; ++i)
    {
        const auto &p = paths[idx[i]];
        out.push_back({p.aoa, p.delay_ns, p.total_length_m, p.order(), idx[i]});
    }
    return out;
}

} // namespace mmwchan

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

#include <array>
#include <cmath>
#include <optional>

#include "mmwchan/constants.hpp"
#include "mmwchan/errors.hpp"

namespace mmwchan
{

// Cartesian point or direction in meters. Axes: x = East, y = North, z = up.
struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr bool operator==(const Vec3 &) const = default;
};

constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

inline Vec3 normalized(const Vec3 &a)
{
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

// Angle between two vectors in radians; atan2 form keeps precision near 0 and pi.
inline double angleBetween(const Vec3 &a, const Vec3 &b)
{
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

inline double degToRad(double deg) { return deg * kPi / 180.0; }
inline double radToDeg(double rad) { return rad * 180.0 / kPi; }

// Wrap an azimuth into [0, 360).
inline double normalizeAzimuth(double az_deg)
{
    double a = std::fmod(az_deg, 360.0);
    if (a < 0.0)
        a += 360.0;
    if (a >= 360.0) // fmod of tiny negatives can round up to 360
        a = 0.0;
    return a;
}

// Pointing direction: azimuth is a compass bearing (0 = North, clockwise), elevation above horizon.
struct Angles
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

inline Angles directionAngles(const Vec3 &d)
{
    const double horiz = std::hypot(d.x, d.y);
    return {normalizeAzimuth(radToDeg(std::atan2(d.x, d.y))), radToDeg(std::atan2(d.z, horiz))};
}

inline Vec3 unitVector(const Angles &a)
{
    const double az = degToRad(a.azimuth_deg), el = degToRad(a.elevation_deg);
    return {std::cos(el) * std::sin(az), std::cos(el) * std::cos(az), std::sin(el)};
}

// Great-circle separation of two directions (deg).
inline double angularDistanceDeg(const Angles &a, const Angles &b)
{
    return radToDeg(angleBetween(unitVector(a), unitVector(b)));
}

// Mirror a point across the plane through `on_plane` with unit normal `n`.
inline Vec3 mirrorPoint(const Vec3 &p, const Vec3 &on_plane, const Vec3 &n)
{
    return p - n * (2.0 * dot(p - on_plane, n));
}

} // namespace mmwchan

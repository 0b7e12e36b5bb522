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

#include <numbers>
#include <string_view>

namespace mmwchan
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = std::numbers::pi;

// Close-in model anchor distance (m).
inline constexpr double kReferenceDistanceM = 1.0;

// SNR threshold above the mean thermal noise floor applied to every PDP (dB).
inline constexpr double kDefaultThresholdDb = 5.0;

// Multipath time resolution of the 400 Mcps sliding correlator (ns).
inline constexpr double kDefaultBinWidthNs = 2.5;

// Angular gate used to pair measured arrival directions with traced paths (deg).
inline constexpr double kDefaultMatchGateDeg = 20.0;

// Link-budget and antenna constants of one measurement system.
struct SounderPreset
{
    std::string_view label;
    double carrier_freq_hz;
    double tx_power_dbm;
    double tx_gain_dbi;
    double rx_gain_dbi;
    double hpbw_az_deg;
    double hpbw_el_deg;
    double max_path_loss_db;
    double rx_height_m;
};

inline constexpr SounderPreset kSounder28GHz{"28GHz", 28.0e9, 30.0, 24.5, 24.5, 10.9, 8.6, 178.0, 1.5};
inline constexpr SounderPreset kSounder73GHz{"73GHz", 73.0e9, 14.6, 27.0, 27.0, 7.0, 7.0, 181.0, 2.0};

inline constexpr double kTxHeightLowM = 7.0;
inline constexpr double kTxHeightHighM = 17.0;

} // namespace mmwchan

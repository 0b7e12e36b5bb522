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

// Coverage extension from beam combining: DEE, d2 and DEF for a few PLE pairs.

#include <cstdio>

#include "mmwchan.hpp"

int main()
{
    using namespace mmwchan;

    struct Pair
    {
        const char *what;
        double single, combined;
    };
    const Pair pairs[] = {
        {"28 GHz, 4 beams coherent", 3.812, 3.307},
        {"28 GHz, 4 beams non-coherent", 3.812, 3.591},
        {"73 GHz, 4 beams coherent", 3.728, 3.235},
        {"73 GHz, 4 beams non-coherent", 3.728, 3.523},
    };

    std::printf("%-30s %7s %9s %7s\n", "case", "DEE", "d2 (m)", "DEF");
    for (const auto &p : pairs)
    {
        const double e = dee(p.single, p.combined).dee;
        std::printf("%-30s %7.3f %9.1f %7.3f\n", p.what, e, extendedDistance(200.0, e), distanceExtensionFactor(200.0, e));
    }

    // Same path loss at d1 with one beam and at d2 with the combined beams.
    CloseInModel one, four;
    one.carrier_freq_hz = four.carrier_freq_hz = 73e9;
    one.ple = 3.728;
    four.ple = 3.235;
    const double d2 = extendedDistance(200.0, dee(one.ple, four.ple).dee);
    std::printf("\nPL(200 m, 1 beam) = %.3f dB, PL(%.1f m, 4 beams) = %.3f dB\n", predictPathLoss(one, 200.0), d2,
                predictPathLoss(four, d2));
}

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

#include <gtest/gtest.h>

#include "../support.hpp"

using namespace mmwchan;
using namespace mmwchan::testing;

namespace
{

// Friis free-space loss at 1 m, written out independently.
double friisAt1m(double f) { return 20.0 * std::log10(4.0 * 3.14159265358979323846 * f / 299792458.0); }

std::vector<PathLossSample> onLine(double n, double f, const std::vector<double> &d)
{
    std::vector<PathLossSample> s;
    for (double x : d)
        s.push_back({"s", x, friisAt1m(f) + 10.0 * n * std::log10(x), {SampleKind::all_angles, 1}, false});
    return s;
}

} // namespace

TEST(Fspl, Examples)
{
    EXPECT_NEAR(fsplAtRef(28e9), 61.39, 0.005);
    EXPECT_NEAR(fsplAtRef(73e9), 69.71, 0.005);
    EXPECT_NEAR(fsplAtRef(kSpeedOfLight / (4.0 * kPi)), 0.0, 1e-12);
    for (double f : {1e9, 28e9, 60e9, 73e9})
        EXPECT_NEAR(fsplAtRef(f), friisAt1m(f), 1e-12);
}

TEST(PathLossFromRecord, LinkBudget)
{
    const auto c = makeCampaign();
    const auto loc = makeLocation("A", 100, LosClass::nlos);
    EXPECT_DOUBLE_EQ(pathLossFromRecord(c, loc, -70.0).path_loss_db, 149.0);
    EXPECT_DOUBLE_EQ(pathLossFromRecord(c, loc, 30.0 + 49.0).path_loss_db, 0.0);
    const auto far = pathLossFromRecord(c, loc, 79.0 - 185.0);
    EXPECT_DOUBLE_EQ(far.path_loss_db, 185.0);
    EXPECT_TRUE(far.beyond_measurable);
    EXPECT_FALSE(pathLossFromRecord(c, loc, 79.0 - 178.0).beyond_measurable);
    EXPECT_THROW(pathLossFromRecord(c, loc, -std::numeric_limits<double>::infinity()), DomainError);
}

TEST(FitPle, ExactOnNoiseFreeLines)
{
    EXPECT_NEAR(fitPle(onLine(2.0, 28e9, {5, 20, 80, 150}), 28e9).ple, 2.0, 1e-12);
    EXPECT_NEAR(fitPle(onLine(4.556, 28e9, {30, 60, 120, 190}), 28e9).ple, 4.556, 1e-12);
    const auto m = fitPle(onLine(2.0, 28e9, {5, 20, 80}), 28e9);
    EXPECT_NEAR(m.shadow_sigma_db, 0.0, 1e-12);
    EXPECT_EQ(m.n_samples, 3u);
    EXPECT_EQ(m.d0_m, 1.0);
}

TEST(FitPle, TwoPointHandExample)
{
    const double a = fsplAtRef(73e9);
    std::vector<PathLossSample> s{{"a", 10, a + 30, {}, false}, {"b", 100, a + 60, {}, false}};
    EXPECT_NEAR(fitPle(s, 73e9).ple, 3.0, 1e-12);
}

TEST(FitPle, Errors)
{
    const double a = fsplAtRef(28e9);
    std::vector<PathLossSample> at_anchor{{"a", 1, a, {}, false}, {"b", 1, a + 1, {}, false}};
    EXPECT_THROW(fitPle(at_anchor, 28e9), DomainError);
    EXPECT_THROW(fitPle(onLine(3, 28e9, {50}), 28e9), DomainError);
    EXPECT_THROW(fitPle(onLine(3, 28e9, {0.5, 50}), 28e9), DomainError);
}

TEST(FitPle, BeyondMeasurableSamplesExcluded)
{
    auto s = onLine(3.0, 28e9, {10, 50, 100});
    s.push_back({"x", 100, 400.0, {}, true});
    const auto m = fitPle(s, 28e9);
    EXPECT_NEAR(m.ple, 3.0, 1e-12);
    EXPECT_EQ(m.n_samples, 3u);
}

TEST(FitPleProperty, ExactRecoveryAcrossExponents)
{
    Rng rng(43);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const double n = rng.uniform(1.0 + 1e-9, 8.0);
        const double f = rng.uniform(1e9, 100e9);
        std::vector<double> d(static_cast<std::size_t>(rng.uniformInt(2, 40)));
        for (auto &x : d)
            x = rng.uniform(1.5, 1000);
        const auto samples = onLine(n, f, d);
        const auto m = fitPle(samples, f);
        ASSERT_NEAR(m.ple, n, 1e-12 * n);
        ASSERT_LT(m.shadow_sigma_db, 1e-9);
        for (const auto &s : samples)
            ASSERT_NEAR(predictPathLoss(m, s.distance_m), s.path_loss_db, 1e-9);
    }
}

TEST(FitPleProperty, ShadowedRecoveryConverges)
{
    Rng rng(47);
    for (double n : {2.0, 3.728, 4.556})
    {
        std::vector<PathLossSample> s;
        for (int i = 0; i < 10000; ++i)
        {
            const double d = rng.uniform(20, 400);
            s.push_back({"s", d, fsplAtRef(73e9) + 10 * n * std::log10(d) + 8.0 * rng.normal(), {}, false});
        }
        const auto m = fitPle(s, 73e9);
        EXPECT_LT(std::abs(m.ple - n), 0.05);
        EXPECT_NEAR(m.shadow_sigma_db, 8.0, 0.3);
    }
}

TEST(PredictPathLoss, Examples)
{
    CloseInModel m;
    m.carrier_freq_hz = 73e9;
    m.ple = 2.0;
    EXPECT_EQ(predictPathLoss(m, 1.0), fsplAtRef(73e9));
    EXPECT_NEAR(predictPathLoss(m, 10.0), fsplAtRef(73e9) + 20.0, 1e-12);
    m.ple = 3.728;
    EXPECT_NEAR(predictPathLoss(m, 200.0), 155.49, 0.01);
    EXPECT_THROW(predictPathLoss(m, 0.99), DomainError);
}

TEST(PredictPathLossProperty, MonotoneInDistance)
{
    Rng rng(53);
    CloseInModel m;
    m.carrier_freq_hz = 28e9;
    for (int trial = 0; trial < 1000; ++trial)
    {
        m.ple = rng.uniform(0.5, 8);
        const double d1 = rng.uniform(1, 1000), d2 = d1 + rng.uniform(1e-6, 100);
        ASSERT_LT(predictPathLoss(m, d1), predictPathLoss(m, d2));
    }
}

TEST(PathLossSamples, AllAnglesAndStrongestBeam)
{
    // 1 mW/ns over one 2.5 ns bin = 2.5 mW
    const auto c = makeCampaign({makeLocation("A", 100, LosClass::nlos, {makeRecord(0, 0, {1.0}), makeRecord(90, 0, {0.4})}),
                                 makeLocation("B", 150, LosClass::nlos)});
    const auto all = allAnglePathLossSamples(c);
    ASSERT_EQ(all.size(), 2u);
    EXPECT_NEAR(all[0].path_loss_db, 79.0 - 10 * std::log10(2.5), 1e-12);
    EXPECT_EQ(all[0].tag.kind, SampleKind::all_angles);
    const auto best = strongestBeamPathLossSamples(c);
    ASSERT_EQ(best.size(), 1u);
    EXPECT_EQ(best[0].path_loss_db, all[0].path_loss_db);
    EXPECT_EQ(toString(best[0].tag), "single-best-beam");
}

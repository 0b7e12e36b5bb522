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

const char *kMinimal = R"({
 "carrier_freq_hz": 28e9, "hpbw_az_deg": 10.9, "hpbw_el_deg": 8.6,
 "tx_power_dbm": 30, "tx_gain_dbi": 24.5, "rx_gain_dbi": 24.5, "max_path_loss_db": 178,
 "locations": [
  {"id": "RX1", "tx_pos": [0, 0, 7], "rx_pos": [30, 40, 7], "tr_distance_m": 50, "los_class": "LOS",
   "outage": false,
   "records": [{"azimuth_deg": 370, "elevation_deg": 0,
                "pdp": {"start_delay_ns": 0, "noise_floor": 1e-6, "powers": [1e-5, 2e-6]}}]}
 ]
})";

std::string replaced(std::string s, const std::string &from, const std::string &to)
{
    const auto at = s.find(from);
    s.replace(at, from.size(), to);
    return s;
}

} // namespace

TEST(CampaignIo, MinimalFileLoadsOneLocation)
{
    std::vector<std::string> warnings;
    const auto c = parseCampaign(kMinimal, "minimal", &warnings);
    ASSERT_EQ(c.locations.size(), 1u);
    const auto &loc = c.locations[0];
    EXPECT_EQ(loc.id, "RX1");
    EXPECT_EQ(loc.los_class, LosClass::los);
    ASSERT_EQ(loc.records.size(), 1u);
    EXPECT_DOUBLE_EQ(loc.records[0].pdp.bin_width_ns, 2.5);
}

TEST(CampaignIo, AzimuthIsWrappedWithWarning)
{
    std::vector<std::string> warnings;
    const auto c = parseCampaign(kMinimal, "minimal", &warnings);
    EXPECT_DOUBLE_EQ(c.locations[0].records[0].azimuth_deg, 10.0);
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("azimuth_deg"), std::string::npos);
}

TEST(CampaignIo, OutageWithRecordsIsRejected)
{
    const auto bad = replaced(kMinimal, "\"outage\": false", "\"outage\": true");
    try
    {
        parseCampaign(bad);
        FAIL() << "expected ValidationError";
    }
    catch (const ValidationError &e)
    {
        EXPECT_NE(e.field().find("outage"), std::string::npos);
    }
}

TEST(CampaignIo, ElevationOutOfRangeNamesField)
{
    const auto bad = replaced(kMinimal, "\"elevation_deg\": 0", "\"elevation_deg\": 95");
    try
    {
        parseCampaign(bad);
        FAIL();
    }
    catch (const ValidationError &e)
    {
        EXPECT_EQ(e.field(), "locations[0].records[0].elevation_deg");
    }
}

TEST(CampaignIo, DistanceMismatchBeyondOnePercent)
{
    EXPECT_THROW(parseCampaign(replaced(kMinimal, "\"tr_distance_m\": 50", "\"tr_distance_m\": 51")), ValidationError);
    EXPECT_NO_THROW(parseCampaign(replaced(kMinimal, "\"tr_distance_m\": 50", "\"tr_distance_m\": 50.4")));
}

TEST(CampaignIo, MalformedJsonReportsLine)
{
    const std::string text = "{\n \"carrier_freq_hz\": 28e9,\n \"hpbw_az_deg\": ,\n}";
    try
    {
        parseCampaign(text, "broken.json");
        FAIL();
    }
    catch (const ParseError &e)
    {
        EXPECT_EQ(e.locus(), "broken.json:3");
    }
}

TEST(CampaignIo, MissingFieldIsParseError)
{
    EXPECT_THROW(parseCampaign(replaced(kMinimal, "\"max_path_loss_db\": 178,", "")), ParseError);
}

TEST(CampaignIo, NoiseFloorFallsBackToCampaignDefault)
{
    auto text = replaced(kMinimal, "\"noise_floor\": 1e-6, ", "");
    EXPECT_THROW(parseCampaign(text), ValidationError);
    text = replaced(text, "\"max_path_loss_db\": 178,", "\"max_path_loss_db\": 178, \"default_noise_floor\": 2e-6,");
    const auto c = parseCampaign(text);
    EXPECT_DOUBLE_EQ(c.locations[0].records[0].pdp.noise_floor, 2e-6);
}

TEST(CampaignIo, DuplicatePointingAngleRejected)
{
    auto c = makeCampaign({makeLocation("A", 50, LosClass::los, {makeRecord(10, 0, {1}), makeRecord(10, 0, {2})})});
    EXPECT_THROW(validateCampaign(c), ValidationError);
}

TEST(CampaignIo, SerializeRoundTripIsExact)
{
    Rng rng(7);
    std::vector<LocationMeasurement> locs;
    for (int i = 0; i < 5; ++i)
    {
        std::vector<AngleRecord> recs;
        for (int r = 0; r < 3; ++r)
            recs.push_back(makeRecord(r * 33.3 + 0.1 * i, -5.0 + r, {rng.uniform(), rng.uniform() * 1e-7, 3.0 / 7.0}));
        auto loc = makeLocation("L" + std::to_string(i), 10.0 + rng.uniform(0, 100), LosClass::nlos, recs);
        locs.push_back(loc);
    }
    locs.push_back(makeLocation("OUT", 123.456, LosClass::nlos));
    locs[0].tx_pos = Vec3{0, 0, 7};
    locs[0].rx_pos = Vec3{locs[0].tr_distance_m, 0, 7};
    const auto c = makeCampaign(locs);
    const auto text = serializeCampaign(c);
    const auto back = parseCampaign(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serializeCampaign(back), text);
}

TEST(Threshold, FiveDbCutoffExample)
{
    const auto t = thresholdPdp(makePdp({1e-5, 2e-6}, 2.5, 0.0, 1e-6), 5.0);
    EXPECT_EQ(t.powers, (std::vector<double>{1e-5, 0.0}));
    // cutoff = noise * 10^0.5
    const auto edge = thresholdPdp(makePdp({3.1623e-6, 3.1622e-6}, 2.5, 0.0, 1e-6), 5.0);
    EXPECT_GT(edge.powers[0], 0.0);
    EXPECT_EQ(edge.powers[1], 0.0);
}

TEST(Threshold, ZeroDbKeepsBinsAtNoiseFloor)
{
    const auto p = makePdp({1e-6, 1e-6, 1e-6}, 2.5, 0.0, 1e-6);
    EXPECT_EQ(thresholdPdp(p, 0.0), p);
}

TEST(Threshold, AllBelowCutoffGivesZeroProfile)
{
    const auto t = thresholdPdp(makePdp({1e-7, 2e-7}, 2.5, 10.0, 1e-6));
    EXPECT_FALSE(hasPower(t));
    EXPECT_EQ(t.size(), 2u);
    EXPECT_DOUBLE_EQ(t.start_delay_ns, 10.0);
}

TEST(Threshold, NegativeThresholdRejected) { EXPECT_THROW(thresholdPdp(makePdp({1}), -1.0), DomainError); }

TEST(ThresholdProperty, IdempotentAndMonotone)
{
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial)
    {
        std::vector<double> p(12);
        for (auto &v : p)
            v = std::pow(10.0, rng.uniform(-8.0, -4.0));
        const auto pdp = makePdp(p, 2.5, 0.0, 1e-7);
        const double th1 = rng.uniform(0.0, 20.0), th2 = th1 + rng.uniform(0.0, 10.0);
        const auto once = thresholdPdp(pdp, th1);
        ASSERT_EQ(thresholdPdp(once, th1), once);
        const auto higher = thresholdPdp(pdp, th2);
        for (std::size_t k = 0; k < p.size(); ++k)
        {
            if (higher.powers[k] > 0.0)
            {
                ASSERT_GT(once.powers[k], 0.0);
            }
            ASSERT_TRUE(once.powers[k] == 0.0 || once.powers[k] == p[k]);
        }
    }
}

TEST(TotalPower, Examples)
{
    EXPECT_DOUBLE_EQ(totalPower(makePdp({4.0})), 10.0);
    EXPECT_DOUBLE_EQ(totalPower(makePdp({0.0, 0.0})), 0.0);
    EXPECT_DOUBLE_EQ(totalPower(makePdp({1.0, 3.0})), 10.0);
}

TEST(TotalPowerProperty, LinearInScaling)
{
    Rng rng(3);
    for (int trial = 0; trial < 1000; ++trial)
    {
        auto pdp = randomPdp(rng);
        const double alpha = std::pow(10.0, rng.uniform(-6, 6));
        auto scaled = pdp;
        for (auto &v : scaled.powers)
            v *= alpha;
        ASSERT_NEAR(totalPower(scaled), alpha * totalPower(pdp), 1e-12 * alpha * totalPower(pdp));
    }
}

TEST(RankBeams, StrongestFirstTiesByAngle)
{
    auto loc = makeLocation("A", 50, LosClass::los,
                            {makeRecord(90, 0, {1.0}), makeRecord(10, 5, {2.0}), makeRecord(10, 0, {2.0}),
                             makeRecord(0, 0, {1e-12})});
    const auto ranked = rankBeams(loc);
    ASSERT_EQ(ranked.size(), 3u); // the last record sits below the noise cutoff
    EXPECT_EQ(ranked[0].record_index, 2u);
    EXPECT_EQ(ranked[1].record_index, 1u);
    EXPECT_EQ(ranked[2].record_index, 0u);
}

TEST(Summary, TableOneNlosFlags)
{
    std::vector<LocationMeasurement> locs;
    int n = 0;
    auto add = [&](double d, bool signal)
    {
        const std::string id = "N" + std::to_string(n++);
        locs.push_back(signal ? makeLocation(id, d, LosClass::nlos, {makeRecord(0, 0, {1e-3})})
                              : makeLocation(id, d, LosClass::nlos));
    };
    for (int i = 0; i < 20; ++i)
        add(61.0 + i * (187.0 - 61.0) / 19.0, true);
    for (int i = 0; i < 13; ++i)
        add(96.0 + i * (193.0 - 96.0) / 12.0, false);
    for (int i = 0; i < 35; ++i)
        add(201.0 + i * (425.0 - 201.0) / 34.0, false);
    const auto s = summarizeCampaign(makeCampaign(locs), 200.0);
    EXPECT_EQ(s.nlos.measured_within.count, 33u);
    EXPECT_EQ(s.nlos.signal_within.count, 20u);
    EXPECT_EQ(s.nlos.outage_within.count, 13u);
    EXPECT_EQ(s.nlos.measured_all.count, 68u);
    EXPECT_EQ(s.nlos.outage_all.count, 48u);
    EXPECT_DOUBLE_EQ(*s.nlos.signal_within.min_distance_m, 61.0);
    EXPECT_DOUBLE_EQ(*s.nlos.signal_within.max_distance_m, 187.0);
    EXPECT_DOUBLE_EQ(*s.nlos.outage_all.max_distance_m, 425.0);
    EXPECT_EQ(s.los.measured_all.count, 0u);
}

TEST(Summary, EmptyCampaignAllZero)
{
    const auto s = summarizeCampaign(makeCampaign(), 200.0);
    for (const auto *cs : {&s.los, &s.nlos})
    {
        EXPECT_EQ(cs->measured_all.count, 0u);
        EXPECT_FALSE(cs->measured_all.min_distance_m);
    }
}

TEST(Summary, FarLocationOnlyInAllDistanceGroup)
{
    const auto s =
        summarizeCampaign(makeCampaign({makeLocation("F", 250, LosClass::los, {makeRecord(0, 0, {1.0})})}), 200.0);
    EXPECT_EQ(s.los.signal_all.count, 1u);
    EXPECT_EQ(s.los.signal_within.count, 0u);
    EXPECT_EQ(s.los.measured_within.count, 0u);
}

TEST(Summary, NonPositiveDistanceCutRejected) { EXPECT_THROW(summarizeCampaign(makeCampaign(), 0.0), DomainError); }

TEST(SummaryProperty, SignalPlusOutagePartitionsMeasured)
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<LocationMeasurement> locs;
        const int n = static_cast<int>(rng.uniformInt(0, 30));
        for (int i = 0; i < n; ++i)
        {
            const auto cls = rng.uniform() < 0.5 ? LosClass::los : LosClass::nlos;
            const double d = rng.uniform(5, 400);
            const double p = rng.uniform() < 0.3 ? 1e-12 : 1e-3; // below or above the cutoff
            locs.push_back(rng.uniform() < 0.2 ? makeLocation("L" + std::to_string(i), d, cls)
                                               : makeLocation("L" + std::to_string(i), d, cls, {makeRecord(0, 0, {p})}));
        }
        const auto s = summarizeCampaign(makeCampaign(locs), rng.uniform(50, 300));
        for (const auto *cs : {&s.los, &s.nlos})
        {
            ASSERT_EQ(cs->signal_within.count + cs->outage_within.count, cs->measured_within.count);
            ASSERT_EQ(cs->signal_all.count + cs->outage_all.count, cs->measured_all.count);
        }
    }
}

TEST(Summary, ExclusionAndClassFilter)
{
    auto c = makeCampaign({makeLocation("A", 50, LosClass::los, {makeRecord(0, 0, {1.0})}),
                           makeLocation("B", 60, LosClass::los, {makeRecord(0, 0, {1.0})})});
    AnalysisOptions opts;
    opts.excluded = {"B"};
    EXPECT_EQ(summarizeCampaign(c, 200, opts).los.measured_all.count, 1u);
}

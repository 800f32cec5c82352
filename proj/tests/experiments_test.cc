// Copyright 2026 The RelayLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relaylab/experiments.h"

#include <cmath>

#include <gtest/gtest.h>

#include "relaylab/errors.h"
#include "relaylab/gap.h"
#include "relaylab/random.h"
#include "test_support.h"

namespace relaylab {
namespace {

SweepSpec coarse_spec(double step) {
  SweepSpec spec;
  spec.step = step;
  return spec;
}

TEST(ResolveThreads, ZeroMeansHardware) {
  EXPECT_GE(resolve_threads(0), 1u);
  EXPECT_EQ(resolve_threads(3), 3u);
}

TEST(SplitMix64, KnownSequenceAndRange) {
  // Reference outputs for seed 0 of the published SplitMix64 generator.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng(), 0x06c45d188009454fULL);
  SplitMix64 draws(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = draws.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double l = draws.log_uniform(1e-2, 1e6);
    ASSERT_GE(l, 1e-2 * (1 - 1e-12));
    ASSERT_LE(l, 1e6 * (1 + 1e-12));
  }
}

TEST(PositionSweep, ValidatesSpec) {
  SweepSpec bad = coarse_spec(0.0);
  EXPECT_THROW(position_sweep(bad), DomainError);
  bad = coarse_spec(0.1);
  bad.x_min = 2.0;
  EXPECT_THROW(position_sweep(bad), DomainError);
  bad = coarse_spec(0.1);
  bad.base.p0 = -1.0;
  EXPECT_THROW(position_sweep(bad), DomainError);
}

TEST(PositionSweep, RecordsAreConsistentAndArgmaxIsAttained) {
  const SweepResult r = position_sweep(coarse_spec(0.05));
  ASSERT_FALSE(r.records.empty());
  EXPECT_LE(r.records.size(), r.grid_points);
  double best = 0.0;
  for (const SweepRecord& rec : r.records) {
    EXPECT_LE(rec.relay.x * rec.relay.x + rec.relay.y * rec.relay.y, 1.0 + 1e-12);
    Geometry g = r.spec.base;
    g.relay = rec.relay;
    EXPECT_EQ(rec.snr, snr_from_geometry(g));
    EXPECT_EQ(rec.report, gap_report(rec.snr));
    best = std::max(best, rec.report.g_bar);
  }
  EXPECT_EQ(r.max_g_bar, best);
  EXPECT_LT(r.max_g_bar, 0.125);
}

TEST(PositionSweep, IdenticalAcrossThreadCounts) {
  SweepSpec one = coarse_spec(0.04);
  one.threads = 1;
  SweepSpec many = one;
  many.threads = 3;
  const SweepResult a = position_sweep(one);
  const SweepResult b = position_sweep(many);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].relay, b.records[i].relay);
    EXPECT_EQ(a.records[i].report, b.records[i].report);
  }
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.max_g_bar, b.max_g_bar);
}

TEST(PositionSweep, MirrorSymmetricAboutTheLink) {
  SweepSpec spec = coarse_spec(0.1);
  spec.x_min = -0.5;
  spec.x_max = 0.5;
  const SweepResult r = position_sweep(spec);
  for (const SweepRecord& rec : r.records) {
    Geometry mirrored = spec.base;
    mirrored.relay = {-rec.relay.x, rec.relay.y};
    const GapReport m = gap_report(snr_from_geometry(mirrored));
    EXPECT_NEAR(m.g_bar, rec.report.g_bar, 1e-12);
  }
}

TEST(PositionSweep, CoarseGridNeverBeatsFinerGrid) {
  const SweepResult coarse = position_sweep(coarse_spec(0.1));
  const SweepResult fine = position_sweep(coarse_spec(0.02));
  EXPECT_LE(coarse.max_g_bar, fine.max_g_bar + 1e-12);
}

TEST(PositionSweep, DirectRegionHasNoGap) {
  SweepSpec spec = coarse_spec(0.1);
  spec.unit_disk_filter = false;
  spec.y_min = 1.5;
  spec.y_max = 2.0;
  const SweepResult r = position_sweep(spec);
  ASSERT_FALSE(r.records.empty());
  for (const SweepRecord& rec : r.records) EXPECT_EQ(rec.report.g_bar, 0.0);
  EXPECT_EQ(r.max_g_bar, 0.0);
}

TEST(PowerScan, ScalesBothTransmitters) {
  Geometry g;
  g.p0 = 2.0;
  g.p1 = 5.0;
  const auto recs = power_scan(g, {1.0, 10.0});
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_NEAR(recs[1].snr.lambda01() / recs[0].snr.lambda01(), 10.0, 1e-12);
  EXPECT_NEAR(recs[1].snr.lambda12() / recs[0].snr.lambda12(), 10.0, 1e-12);
  EXPECT_DOUBLE_EQ(recs[0].snr.lambda02(), 2.0);
  EXPECT_THROW(power_scan(g, {0.0}), DomainError);
}

TEST(PowerScan, LowPowerApproachesLimit) {
  Geometry g;
  g.p0 = 1.0;
  g.p1 = 1.0;
  const auto recs = power_scan(g, {1e-6});
  ASSERT_TRUE(recs[0].g_bar_ub && recs[0].g_ub);
  const double limit = low_snr_limit_gbar_ub(g).value;
  EXPECT_LT(std::abs(*recs[0].g_bar_ub / limit - 1.0), 0.05);
  EXPECT_LT(*recs[0].g_ub, 1e-3);
}

TEST(PowerScan, UpperBoundGapGrowsTowardHighSnrLimit) {
  Geometry g;
  g.p0 = 1.0;
  g.p1 = 1.0;
  const auto recs = power_scan(g, {1e2, 1e4, 1e6, 1e9});
  const double limit = high_snr_limit_g_ub(g);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_GT(*recs[i].g_ub, *recs[i - 1].g_ub);
    EXPECT_LT(*recs[i].g_ub, limit);
  }
}

TEST(ProximityScan, NearSourceDeclines) {
  const auto recs = proximity_scan(Proximity::kRelayNearSource,
                                   {1e-1, 1e-2, 1e-3, 1e-4});
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[2].relay, (Point{0.0, 1e-3}));
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_LT(*recs[i].report.g_bar_ub, *recs[i - 1].report.g_bar_ub);
    EXPECT_LT(*recs[i].report.g_ub, *recs[i - 1].report.g_ub);
  }
}

TEST(ProximityScan, NearDestinationVanishes) {
  const auto recs =
      proximity_scan(Proximity::kRelayNearDestination, {1e-2, 1e-4});
  EXPECT_EQ(recs[1].relay, (Point{0.0, 1.0 - 1e-4}));
  EXPECT_LT(*recs[1].report.g_bar_ub, 1e-2);
  EXPECT_LT(*recs[1].report.g_ub, 1e-2);
}

TEST(ProximityScan, ValidatesDistances) {
  EXPECT_THROW(proximity_scan(Proximity::kRelayNearSource, {1e-2, 1e-1}),
               DomainError);
  EXPECT_THROW(proximity_scan(Proximity::kRelayNearSource, {1.0}), DomainError);
  EXPECT_THROW(proximity_scan(Proximity::kRelayNearSource, {0.0}), DomainError);
}

TEST(TheoremFuzz, NoViolationsAndBelowOneEighth) {
  const FuzzSummary f = theorem_fuzz(7, 2000);
  EXPECT_EQ(f.samples, 2000u);
  EXPECT_TRUE(f.violations.empty());
  EXPECT_LE(f.worst_g_bar, 0.125);
  ASSERT_TRUE(f.worst_channel.has_value());
  EXPECT_EQ(gap_report(*f.worst_channel).g_bar, f.worst_g_bar);
}

TEST(TheoremFuzz, DeterministicForSeedAndThreads) {
  const FuzzSummary a = theorem_fuzz(42, 1500, 1);
  const FuzzSummary b = theorem_fuzz(42, 1500, 1);
  const FuzzSummary c = theorem_fuzz(42, 1500, 3);
  EXPECT_EQ(a.rejected, b.rejected);
  EXPECT_EQ(a.worst_g_bar, b.worst_g_bar);
  EXPECT_EQ(a.worst_channel, b.worst_channel);
  EXPECT_EQ(a.rejected, c.rejected);
  EXPECT_EQ(a.worst_g_bar, c.worst_g_bar);
  EXPECT_EQ(a.worst_channel, c.worst_channel);
  const FuzzSummary other = theorem_fuzz(43, 1500, 1);
  EXPECT_NE(a.worst_channel, other.worst_channel);
}

TEST(BoundSearch, ImprovesOnHandPickedPointAndGrowsWithRelayLink) {
  const auto recs = bound_approach_search({1e3, 1e4, 1e5});
  ASSERT_EQ(recs.size(), 3u);
  const double hand = gap_report(SnrTriple::make(62000, 230, 1e5)).g_bar;
  EXPECT_GE(recs[2].g_bar, hand);
  EXPECT_NEAR(recs[2].g_bar, 0.122, 0.002);
  EXPECT_LT(recs[0].g_bar, recs[1].g_bar);
  EXPECT_LT(recs[1].g_bar, recs[2].g_bar);
  for (const auto& r : recs) {
    EXPECT_GT(r.lambda01, r.lambda02);
    EXPECT_NEAR(gap_report(SnrTriple::make(r.lambda01, r.lambda02, r.lambda12)).g_bar,
                r.g_bar, 1e-15);
  }
}

}  // namespace
}  // namespace relaylab

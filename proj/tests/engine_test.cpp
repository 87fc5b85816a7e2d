/*
 * Copyright 2026 The BWAR Simulator Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bwar/engine.hpp"

#include <deque>

#include <gtest/gtest.h>

namespace bwar {
namespace {

constexpr Variant kBackpressure[] = {Variant::kRb, Variant::kRbDa,
                                     Variant::kBwarIm, Variant::kBwarId,
                                     Variant::kBwarTd};

SimConfig small(Variant v, double lambda, Slot slots) {
  SimConfig cfg;
  cfg.cells = 9;
  cfg.nodes = 16;
  cfg.variant = v;
  cfg.lambda = lambda;
  cfg.slots = slots;
  return cfg;
}

TEST(Simulator, RejectsInvalidConfig) {
  SimConfig cfg = small(Variant::kRb, 2.0, 10);
  EXPECT_THROW(Simulator{cfg}, ConfigError);
}

TEST(Simulator, NoTrafficNoTransmissions) {
  for (Variant v : kAllVariants) {
    Simulator sim(small(v, 0.0, 2000));
    sim.run_to_end();
    const auto& s = sim.samples();
    EXPECT_EQ(s.admitted, 0) << to_string(v);
    EXPECT_EQ(s.transmissions, 0);
    EXPECT_EQ(s.sum_q + s.sum_d, 0);
    MetricsReport r = sim.report();
    EXPECT_FALSE(r.mean_delay.has_value());
    EXPECT_TRUE(r.stable);
  }
}

// Two nodes that always share the only cell and both receive a packet every
// slot. One packet crosses per slot, so the longer queue is served (node 0
// on ties) and both backlogs grow by half a packet per slot.
struct ChainOracle {
  std::deque<Slot> q[2];
  std::int64_t delay_sum = 0;
  std::int64_t delivered = 0;

  // Returns the sender served this slot, or -1.
  int step(Slot t) {
    int sender = -1;
    if (!q[0].empty() || !q[1].empty()) {
      sender = q[1].size() > q[0].size() ? 1 : 0;
      delay_sum += t - q[sender].front();
      ++delivered;
      q[sender].pop_front();
    }
    q[0].push_back(t);
    q[1].push_back(t);
    return sender;
  }
};

TEST(Simulator, TwoNodeChainMatchesHandSimulation) {
  for (Variant v : kBackpressure) {
    SimConfig cfg;
    cfg.cells = 1;
    cfg.nodes = 2;
    cfg.lambda = 1.0;
    cfg.variant = v;
    cfg.slots = 400;
    cfg.audit = true;
    Simulator sim(cfg);
    ChainOracle oracle;
    for (Slot t = 0; t < cfg.slots; ++t) {
      sim.step();
      const int sender = oracle.step(t);
      const auto& tx = sim.last_transmissions();
      if (sender < 0) {
        EXPECT_TRUE(tx.empty()) << t;
      } else {
        ASSERT_EQ(tx.size(), 1u) << t;
        EXPECT_EQ(tx[0].tx.sender, static_cast<NodeId>(sender)) << t;
        EXPECT_TRUE(tx[0].delivered);
      }
      ASSERT_EQ(sim.network().q(0, 1), static_cast<int>(oracle.q[0].size())) << t;
      ASSERT_EQ(sim.network().q(1, 0), static_cast<int>(oracle.q[1].size())) << t;
    }
    EXPECT_EQ(sim.samples().delivered, oracle.delivered);
    EXPECT_EQ(sim.samples().delay_sum, oracle.delay_sum);
    EXPECT_EQ(sim.violation_count(), 0) << to_string(v);
    // First packet waits exactly one slot.
    EXPECT_EQ(oracle.delivered, cfg.slots - 1);
    EXPECT_FALSE(sim.report().stable);
  }
}

TEST(Simulator, PerSlotAuditFindsNothing) {
  for (Variant v : kAllVariants) {
    for (double lambda : {0.001, 0.05, 0.2}) {
      SimConfig cfg = small(v, lambda, 1000);
      cfg.audit = true;
      cfg.seed = 3;
      Simulator sim(cfg);
      sim.run_to_end();
      EXPECT_EQ(sim.violation_count(), 0)
          << to_string(v) << " lambda " << lambda << ": "
          << (sim.violations().empty() ? "" : sim.violations().front());
      EXPECT_GT(sim.samples().admitted, 0);
    }
  }
}

TEST(Simulator, AuditHoldsForTightTimeoutAndLargeBuffers) {
  for (int timeout : {1, 3}) {
    SimConfig cfg = small(Variant::kBwarTd, 0.02, 2000);
    cfg.timeout = timeout;
    cfg.audit = true;
    Simulator sim(cfg);
    sim.run_to_end();
    EXPECT_EQ(sim.violation_count(), 0)
        << (sim.violations().empty() ? "" : sim.violations().front());
  }
  for (Variant v : {Variant::kBwarIm, Variant::kBwarId, Variant::kBwarTd}) {
    SimConfig cfg = small(v, 0.02, 2000);
    cfg.q_th = 2;
    cfg.d_max = 3;
    cfg.audit = true;
    Simulator sim(cfg);
    sim.run_to_end();
    EXPECT_EQ(sim.violation_count(), 0)
        << to_string(v) << ": "
        << (sim.violations().empty() ? "" : sim.violations().front());
  }
}

TEST(Simulator, DelaysAreAtLeastOneSlot) {
  for (Variant v : kAllVariants) {
    Simulator sim(small(v, 0.02, 3000));
    std::int64_t checked = 0;
    while (sim.slot() < sim.config().slots) {
      const Slot t = sim.slot();
      sim.step();
      for (const auto& rec : sim.last_transmissions()) {
        if (!rec.delivered) continue;
        const Slot admit = v == Variant::kSnw
                               ? sim.spray().registry().entry(rec.packet).admit_time
                               : sim.network().registry().entry(rec.packet).admit_time;
        EXPECT_GE(t - admit, 1);
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
    EXPECT_LE(sim.samples().delivered, sim.samples().admitted);
  }
}

TEST(Simulator, BackpressureWithoutRedundancyNeverBuffersDuplicates) {
  for (Variant v : {Variant::kRb, Variant::kRbDa}) {
    Simulator sim(small(v, 0.05, 3000));
    sim.run_to_end();
    EXPECT_EQ(sim.samples().sum_d, 0);
    EXPECT_EQ(sim.samples().duplicate_transmissions, 0);
    EXPECT_EQ(sim.duplications(), 0);
  }
}

TEST(Simulator, RedundancyVariantsDuplicateAtLowLoad) {
  for (Variant v : {Variant::kBwarIm, Variant::kBwarId, Variant::kBwarTd}) {
    Simulator sim(small(v, 0.001, 20000));
    sim.run_to_end();
    EXPECT_GT(sim.duplications(), 0) << to_string(v);
    EXPECT_GT(sim.samples().duplicate_transmissions, 0);
  }
}

TEST(Simulator, IdealRemovalLedgerMatchesResidents) {
  for (Variant v : {Variant::kBwarIm, Variant::kBwarId}) {
    Simulator sim(small(v, 0.01, 5000));
    sim.run_to_end();
    const Network& net = sim.network();
    EXPECT_EQ(net.dup_entries() - net.dup_exits(), net.total_d());
    EXPECT_GT(sim.ledger().total(), 0);
  }
}

TEST(Run, DeterministicPerSeed) {
  SimConfig cfg = small(Variant::kBwarId, 0.001, 100000);
  RunRecord a{"x", cfg, run(cfg)};
  RunRecord b{"x", cfg, run(cfg)};
  EXPECT_EQ(csv_row(a), csv_row(b));
  cfg.seed = 2;
  RunRecord c{"x", cfg, run(cfg)};
  EXPECT_NE(csv_row(a), csv_row(c));
}

TEST(Run, StableBelowCapacityUnstableAbove) {
  SimConfig cfg;
  cfg.cells = 25;
  cfg.nodes = 44;
  cfg.variant = Variant::kRb;
  cfg.slots = 200000;
  cfg.lambda = 0.12;
  MetricsReport low = run(cfg);
  cfg.lambda = 0.20;
  MetricsReport high = run(cfg);
  EXPECT_TRUE(low.stable);
  EXPECT_LT(std::abs(low.growth_slope), 1e-3);
  EXPECT_FALSE(high.stable);
  EXPECT_GT(high.growth_slope, 1.0);
  EXPECT_GT(high.mean_q, 10 * low.mean_q);
}

TEST(RunBatch, KeepsInputOrder) {
  std::vector<SimConfig> configs;
  for (Variant v : kAllVariants) configs.push_back(small(v, 0.01, 2000));
  auto parallel = run_batch(configs, 3);
  ASSERT_EQ(parallel.size(), configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    RunRecord want{"x", configs[i], run(configs[i])};
    RunRecord got{"x", configs[i], parallel[i]};
    EXPECT_EQ(csv_row(got), csv_row(want));
  }
}

TEST(RunBatch, PropagatesErrors) {
  std::vector<SimConfig> configs{small(Variant::kRb, 0.01, 100),
                                 small(Variant::kRb, 3.0, 100)};
  EXPECT_THROW(run_batch(configs, 2), ConfigError);
  EXPECT_THROW(run_batch(configs, 1), ConfigError);
}

}  // namespace
}  // namespace bwar

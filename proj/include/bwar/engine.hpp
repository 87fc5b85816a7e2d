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

#ifndef BWAR_ENGINE_HPP
#define BWAR_ENGINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwar/core.hpp"
#include "bwar/duplicates.hpp"
#include "bwar/metrics.hpp"
#include "bwar/mobility.hpp"
#include "bwar/network.hpp"
#include "bwar/policy.hpp"
#include "bwar/rng.hpp"
#include "bwar/spray.hpp"

namespace bwar {

/// What one committed transmission did.
struct TransmissionRecord {
  ScheduledTransmission tx;
  PacketId packet = 0;
  int sender_main_before = 0;  // Q(sender, commodity) when it was served
  bool delivered = false;      // first arrival at the destination
  bool duplicated = false;     // a DuplicationEvent fired
};

/**
 * Slot-by-slot simulation of one configuration.
 *
 * Each slot runs, in order: placement draw; (BWAR-TD) flagged-copy
 * encounters; one scheduling decision per cell over the slot-start queues;
 * commit of all decisions in cell order; removals (ideal purge or timeout
 * sweep); exogenous Bernoulli arrivals stamped with the slot; sampling.
 * Service therefore precedes arrival, so a packet admitted in slot t is
 * delivered no earlier than slot t + 1.
 */
class Simulator {
 public:
  /// Validates `cfg`; throws ConfigError.
  explicit Simulator(const SimConfig& cfg);

  void step();
  /// Steps until `slots` slots have run.
  void run_to_end();

  Slot slot() const { return slot_; }  // next slot to execute
  const SimConfig& config() const { return cfg_; }
  const Placement& placement() const { return placement_; }
  const Network& network() const { return net_; }
  const SprayNetwork& spray() const { return spray_; }
  const RunSamples& samples() const { return samples_; }
  const RemovalLedger& ledger() const { return ledger_; }
  const std::vector<TransmissionRecord>& last_transmissions() const {
    return transmissions_;
  }
  std::int64_t duplications() const { return duplications_; }

  /// Audit results (only populated when cfg.audit is set).
  std::int64_t violation_count() const { return violation_count_; }
  const std::vector<std::string>& violations() const { return violations_; }

  MetricsReport report() const { return finalize(samples_, cfg_); }

 private:
  void step_backpressure(Slot t);
  void step_spray(Slot t);
  void commit(ScheduledTransmission tx, Slot t);
  void deliver(const Packet& p, Slot t, TransmissionRecord& rec);
  void receive_original(NodeId b, const Packet& p);
  void receive_copy(NodeId b, const Packet& p);
  void admit_arrivals(Slot t);
  void sample(Slot t);

  SimConfig cfg_;
  RngStreams rngs_;
  Slot slot_ = 0;
  Placement placement_;
  Network net_;
  SprayNetwork spray_;
  RunSamples samples_;
  RemovalLedger ledger_;
  std::vector<TransmissionRecord> transmissions_;
  std::vector<PacketId> delivered_now_;
  std::int64_t duplications_ = 0;
  std::int64_t violation_count_ = 0;
  std::vector<std::string> violations_;
};

/// Runs `cfg` for cfg.slots slots.
MetricsReport run(const SimConfig& cfg);

/// Per-slot invariant audit; returns one message per violation.
std::vector<std::string> audit(const Simulator& sim);

/// Worker count: BWAR_WORKERS if set and positive, else hardware threads.
int default_workers();

/// Runs independent configurations on a worker pool. Results keep the
/// input order regardless of scheduling.
std::vector<MetricsReport> run_batch(std::span<const SimConfig> configs,
                                     int workers = 0);

}  // namespace bwar

#endif  // BWAR_ENGINE_HPP

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

#ifndef BWAR_SPRAY_HPP
#define BWAR_SPRAY_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "bwar/core.hpp"
#include "bwar/network.hpp"
#include "bwar/policy.hpp"

namespace bwar {

struct SprayCopy {
  Packet packet;
  int tokens = 1;
};

/**
 * Binary Spray and Wait.
 *
 * A packet is admitted with L copy tokens. A holder with more than one token
 * hands floor(tokens/2) of them, together with a copy, to a cell-mate that
 * has no copy; a holder with one token waits to meet the destination.
 * Destinations tell holders which packets they already have when they meet,
 * and holders drop those copies without using the channel.
 *
 * The source's copy is an Original; relayed copies are Duplicates.
 */
class SprayNetwork {
 public:
  SprayNetwork(int nodes, int copies);

  int nodes() const { return nodes_; }
  int copies() const { return copies_; }

  Packet admit(NodeId source, Slot t);

  /// Holder-side state for tests and audits.
  std::vector<SprayCopy> stored(NodeId n, NodeId c) const;
  std::optional<int> tokens(NodeId n, PacketId id) const;
  bool holds(NodeId n, PacketId id) const;
  const std::vector<NodeId>& holders(PacketId id) const { return holders_[id]; }

  /// Holders in the cell drop copies their cell-mate destinations already
  /// received. Returns the number of copies dropped.
  std::int64_t drop_acknowledged(std::span<const NodeId> members);

  /// Delivery of the oldest packet whose destination is in the cell, else
  /// one binary spray of the oldest sprayable packet; nothing otherwise.
  std::optional<ScheduledTransmission> select(CellId cell,
                                              std::span<const NodeId> members) const;

  struct CommitResult {
    PacketId packet = 0;
    bool delivered = false;  // first arrival at the destination
    Slot admit_time = 0;
  };
  CommitResult commit(ScheduledTransmission& tx);

  /// Copy is sprayed: inserts a copy at `receiver` with `tokens`. Exposed for
  /// tests that build holder states directly.
  void place_copy(NodeId n, const Packet& p, int tokens);

  const PacketRegistry& registry() const { return registry_; }

  std::int64_t total_originals() const { return total_originals_; }
  std::int64_t total_relays() const { return total_relays_; }
  std::int64_t undelivered_originals() const {
    return total_originals_ - stale_originals_;
  }

 private:
  using Queue = std::deque<SprayCopy>;  // sorted by packet id
  struct CopyQueues {
    Queue sprayable;  // tokens > 1
    Queue waiting;    // tokens == 1
  };

  CopyQueues& at(NodeId n, NodeId c) {
    return store_[static_cast<std::size_t>(n) * nodes_ + c];
  }
  const CopyQueues& at(NodeId n, NodeId c) const {
    return store_[static_cast<std::size_t>(n) * nodes_ + c];
  }
  std::optional<SprayCopy> take(NodeId n, NodeId c, PacketId id);
  void insert(NodeId n, const SprayCopy& copy);
  void count(const Packet& p, int delta);

  int nodes_;
  int copies_;
  std::vector<CopyQueues> store_;
  std::vector<std::vector<NodeId>> holders_;          // by packet id
  std::vector<std::vector<PacketId>> acknowledged_;   // by (node, commodity)
  PacketRegistry registry_;
  std::int64_t total_originals_ = 0;
  std::int64_t total_relays_ = 0;
  std::int64_t stale_originals_ = 0;
};

}  // namespace bwar

#endif  // BWAR_SPRAY_HPP

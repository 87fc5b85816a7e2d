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

#ifndef BWAR_NETWORK_HPP
#define BWAR_NETWORK_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "bwar/core.hpp"

namespace bwar {

/// Admission bookkeeping shared by every copy of a packet.
class PacketRegistry {
 public:
  struct Entry {
    NodeId commodity = 0;
    Slot admit_time = 0;
    std::uint32_t main_copies = 0;  // copies sitting in main queues
    std::uint32_t dup_copies = 0;   // copies sitting in duplicate buffers
    bool delivered = false;
  };

  /// Stamps a fresh packet; ids increase monotonically from 0.
  Packet admit(NodeId source, NodeId commodity, Slot t);

  std::int64_t admitted() const { return static_cast<std::int64_t>(entries_.size()); }
  std::int64_t delivered_count() const { return delivered_count_; }

  const Entry& entry(PacketId id) const { return entries_[id]; }
  Entry& entry(PacketId id) { return entries_[id]; }

  bool delivered(PacketId id) const { return entries_[id].delivered; }
  /// Returns false if the destination already had it.
  bool mark_delivered(PacketId id);

 private:
  std::vector<Entry> entries_;
  std::int64_t delivered_count_ = 0;
};

struct NodeState {
  NodeId node = 0;
  NodeId partner = 0;
  std::vector<std::deque<Packet>> main_queues;  // indexed by commodity
  std::vector<std::vector<Packet>> dup_buffers;  // indexed by commodity, <= d_max each
};

/**
 * Main queues and duplicate buffers of every node, plus occupancy counts.
 *
 * All mutation goes through the member functions so that the flat
 * occupancy arrays the scheduler scans stay in step with the storage.
 * Q(n, c) counts main-queue packets and D(n, c) duplicate-buffer packets
 * (Duplicates and FlaggedOriginals alike).
 */
class Network {
 public:
  Network(int nodes, int d_max);

  int nodes() const { return nodes_; }
  int d_max() const { return d_max_; }

  const NodeState& node(NodeId n) const { return states_[n]; }

  int q(NodeId n, NodeId c) const { return q_[index(n, c)]; }
  int d(NodeId n, NodeId c) const { return d_[index(n, c)]; }
  std::span<const int> q_row(NodeId n) const {
    return {q_.data() + index(n, 0), static_cast<std::size_t>(nodes_)};
  }
  std::span<const int> d_row(NodeId n) const {
    return {d_.data() + index(n, 0), static_cast<std::size_t>(nodes_)};
  }
  /// Packets of any commodity stored at node n (main + duplicate).
  int load(NodeId n) const { return load_[n]; }

  std::int64_t total_q() const { return total_q_; }
  std::int64_t total_d() const { return total_d_; }
  /// Main-queue packets whose destination already received them.
  std::int64_t stale_main() const { return stale_main_; }
  std::int64_t undelivered_main() const { return total_q_ - stale_main_; }

  PacketRegistry& registry() { return registry_; }
  const PacketRegistry& registry() const { return registry_; }

  /// Exogenous arrival at `source`, destined to its partner.
  Packet admit(NodeId source, Slot t);
  /// Records a delivery; returns false when it was already delivered.
  bool mark_delivered(PacketId id);

  void push_main(NodeId n, const Packet& p);
  Packet pop_main(NodeId n, NodeId c);
  /// Removes the main-queue copy of `id` at n; false if none.
  bool erase_main(NodeId n, NodeId c, PacketId id);

  bool dup_has_room(NodeId n, NodeId c) const { return d(n, c) < d_max_; }
  void add_dup(NodeId n, const Packet& p);
  /// Oldest entry of the duplicate buffer (the one served first).
  const Packet& front_dup(NodeId n, NodeId c) const {
    return states_[n].dup_buffers[c].front();
  }
  /// Removes the duplicate-buffer copy of `id` at n, if any.
  std::optional<Packet> erase_dup(NodeId n, NodeId c, PacketId id);

  /// Any copy of `id` (main or duplicate) stored at n.
  bool holds(NodeId n, NodeId c, PacketId id) const;
  std::optional<CopyKind> dup_kind(NodeId n, NodeId c, PacketId id) const;

  std::int64_t dup_entries() const { return dup_entries_; }
  std::int64_t dup_exits() const { return dup_exits_; }

 private:
  std::size_t index(NodeId n, NodeId c) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(nodes_) + c;
  }
  void on_main_added(const Packet& p, int delta);

  int nodes_;
  int d_max_;
  std::vector<NodeState> states_;
  std::vector<int> q_;
  std::vector<int> d_;
  std::vector<int> load_;
  std::int64_t total_q_ = 0;
  std::int64_t total_d_ = 0;
  std::int64_t stale_main_ = 0;
  std::int64_t dup_entries_ = 0;
  std::int64_t dup_exits_ = 0;
  PacketRegistry registry_;
};

}  // namespace bwar

#endif  // BWAR_NETWORK_HPP

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

#include "bwar/duplicates.hpp"

#include <vector>

namespace bwar {

bool duplicate_target_has_room(Variant variant, const Network& net,
                               NodeId sender, NodeId receiver,
                               const Packet& packet) {
  const NodeId c = packet.commodity;
  if (variant == Variant::kBwarIm) {
    return net.dup_has_room(receiver, c) && !net.holds(receiver, c, packet.id);
  }
  return net.dup_has_room(sender, c);
}

std::optional<DuplicationEvent> maybe_duplicate(
    Variant variant, NodeId sender, NodeId receiver, const Packet& packet,
    int post_tx_q, int post_tx_d, bool target_has_room, int q_th, int d_max,
    Slot slot) {
  if (!uses_duplicates(variant)) return std::nullopt;
  if (packet.kind != CopyKind::kOriginal) return std::nullopt;
  if (receiver == packet.commodity) return std::nullopt;
  if (post_tx_q >= q_th || post_tx_d >= d_max || !target_has_room) {
    return std::nullopt;
  }
  DuplicationEvent ev;
  ev.packet = packet.id;
  ev.creator = sender;
  ev.receiver = receiver;
  ev.slot = slot;
  ev.placement = variant == Variant::kBwarIm ? TwinPlacement::kReceiverDuplicate
                                             : TwinPlacement::kSenderFlagged;
  return ev;
}

RemovalLedger ideal_purge(Network& net, PacketId id) {
  RemovalLedger ledger;
  const auto& entry = net.registry().entry(id);
  const NodeId c = entry.commodity;
  for (NodeId n = 0; n < static_cast<NodeId>(net.nodes()); ++n) {
    if (entry.main_copies == 0 && entry.dup_copies == 0) break;
    if (n == c) continue;
    if (entry.dup_copies > 0 && net.erase_dup(n, c, id)) {
      ++ledger.removed_duplicates;
    }
    if (entry.main_copies > 0 && net.q(n, c) > 0 && net.erase_main(n, c, id)) {
      ++ledger.removed_originals;
    }
  }
  return ledger;
}

RemovalLedger timeout_sweep(Network& net, Slot t, int timeout) {
  RemovalLedger ledger;
  if (net.total_d() == 0) return ledger;
  const NodeId n_nodes = static_cast<NodeId>(net.nodes());
  std::vector<PacketId> expired;
  for (NodeId n = 0; n < n_nodes; ++n) {
    for (NodeId c = 0; c < n_nodes; ++c) {
      if (net.d(n, c) == 0) continue;
      expired.clear();
      for (const Packet& p : net.node(n).dup_buffers[c]) {
        if (p.kind == CopyKind::kDuplicate && t - p.admit_time >= timeout) {
          expired.push_back(p.id);
        }
      }
      for (PacketId id : expired) {
        if (net.erase_dup(n, c, id)) ++ledger.removed_duplicates;
      }
    }
  }
  return ledger;
}

EncounterOutcome flagged_encounter_resolution(Network& net,
                                              const Placement& placement,
                                              NodeId holder, NodeId dest) {
  EncounterOutcome out;
  if (holder == dest || !placement.same_cell(holder, dest)) return out;
  if (net.d(holder, dest) == 0) return out;

  std::vector<Packet> flagged;
  for (const Packet& p : net.node(holder).dup_buffers[dest]) {
    if (p.kind == CopyKind::kFlaggedOriginal) flagged.push_back(p);
  }
  for (const Packet& p : flagged) {
    net.erase_dup(holder, dest, p.id);
    if (net.registry().delivered(p.id)) {
      ++out.acknowledged;
    } else {
      net.push_main(holder, p.as(CopyKind::kOriginal));
      ++out.returned_to_main;
    }
  }
  return out;
}

}  // namespace bwar

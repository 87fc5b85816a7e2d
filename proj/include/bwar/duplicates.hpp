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

#ifndef BWAR_DUPLICATES_HPP
#define BWAR_DUPLICATES_HPP

#include <cstdint>
#include <optional>

#include "bwar/core.hpp"
#include "bwar/mobility.hpp"
#include "bwar/network.hpp"

namespace bwar {

/// Where the two copies of a duplicated transmission end up.
enum class TwinPlacement {
  // BWAR-IM: sender keeps its Original in the main queue, the receiver stores
  // the arriving copy as a Duplicate.
  kReceiverDuplicate,
  // BWAR-ID/TD: the receiver's copy is the Original, the sender's retained
  // copy moves into its duplicate buffer as a FlaggedOriginal.
  kSenderFlagged,
};

struct DuplicationEvent {
  PacketId packet = 0;
  NodeId creator = 0;
  NodeId receiver = 0;
  Slot slot = 0;
  TwinPlacement placement = TwinPlacement::kSenderFlagged;
};

/// Removed-packet counts: main-queue copies and duplicate-buffer copies.
struct RemovalLedger {
  std::int64_t removed_originals = 0;
  std::int64_t removed_duplicates = 0;

  RemovalLedger& operator+=(const RemovalLedger& o) {
    removed_originals += o.removed_originals;
    removed_duplicates += o.removed_duplicates;
    return *this;
  }
  std::int64_t total() const { return removed_originals + removed_duplicates; }
};

/// Whether the buffer that would store the new copy can take it: the
/// receiver's buffer for BWAR-IM, the sender's own for BWAR-ID/TD.
bool duplicate_target_has_room(Variant variant, const Network& net,
                               NodeId sender, NodeId receiver,
                               const Packet& packet);

/**
 * Adaptive-redundancy trigger for one original-packet transmission.
 *
 * A copy is kept when the sender's queue for the commodity drops below
 * `q_th` and its duplicate buffer is not full (with q_th = D_max = 1 this is
 * exactly Q + D = 0 after the transmission) and the target buffer has room.
 * Deliveries to the destination are never duplicated.
 */
std::optional<DuplicationEvent> maybe_duplicate(
    Variant variant, NodeId sender, NodeId receiver, const Packet& packet,
    int post_tx_q, int post_tx_d, bool target_has_room, int q_th, int d_max,
    Slot slot);

/// Removes every remaining copy of a delivered packet, anywhere.
RemovalLedger ideal_purge(Network& net, PacketId id);

/// Removes every Duplicate admitted at least `timeout` slots before `t`.
/// FlaggedOriginals are never timed out.
RemovalLedger timeout_sweep(Network& net, Slot t, int timeout);

struct EncounterOutcome {
  int acknowledged = 0;       // flagged copies deleted on a direct ack
  int returned_to_main = 0;   // flagged copies moved back as Originals
};

/// A holder of FlaggedOriginals meets their destination: copies the
/// destination already has are deleted, the rest re-enter the main queue.
/// Nothing happens unless both nodes share a cell.
EncounterOutcome flagged_encounter_resolution(Network& net,
                                              const Placement& placement,
                                              NodeId holder, NodeId dest);

}  // namespace bwar

#endif  // BWAR_DUPLICATES_HPP

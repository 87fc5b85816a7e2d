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

#ifndef BWAR_POLICY_HPP
#define BWAR_POLICY_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "bwar/core.hpp"
#include "bwar/network.hpp"
#include "bwar/rng.hpp"

namespace bwar {

/**
 * Link weight of the adaptive-redundancy scheduler, scaled by 4 * D_max.
 *
 * The real-valued weight is
 *   (Q_i - Q_j) + 1/2 * [j is the destination and Q_i + D_i > 0]
 *               + 1/(4 D_max) * (D_i - D_j).
 * Multiplying by 4 D_max gives an exact integer. The indicator and duplicate
 * terms together span [-D_max, 3 D_max], so a weight one queue-step lower can
 * tie a higher one at the edge of that span; the scheduler ranks candidates
 * on (q_diff, dest_flag, dup_diff) instead of on this value alone.
 */
struct LinkWeight {
  std::int64_t scaled_weight = 0;
  std::int64_t q_diff = 0;
  bool dest_flag = false;
  std::int64_t dup_diff = 0;

  double value(int d_max) const {
    return static_cast<double>(scaled_weight) / (4.0 * d_max);
  }
};

/// Plain backpressure weight Q_i - Q_j.
inline std::int64_t rb_weight(std::int64_t q_i, std::int64_t q_j) {
  return q_i - q_j;
}

LinkWeight bwar_weight(std::int64_t q_i, std::int64_t q_j, std::int64_t d_i,
                       std::int64_t d_j, bool j_is_dest, int d_max);

/// One per cell per slot. `served_kind` is filled in when committed.
struct ScheduledTransmission {
  CellId cell = 0;
  NodeId sender = 0;
  NodeId receiver = 0;
  NodeId commodity = 0;
  std::optional<CopyKind> served_kind;
  // Set by schedulers that pick a specific packet (Spray and Wait).
  std::optional<PacketId> packet;

  friend bool operator==(const ScheduledTransmission&,
                         const ScheduledTransmission&) = default;
};

/// Draws for the optional randomized residual tie-break.
struct TieBreaker {
  bool random = false;
  Rng* rng = nullptr;
};

/**
 * Picks the single transmission of a cell for the backpressure variants.
 *
 * RB maximizes the queue differential. RB-DA additionally prefers, among
 * maximizers, a receiver that is the commodity's destination. The BWAR
 * variants then prefer the larger duplicate-buffer differential. Remaining
 * ties go to the lexicographically smallest (sender, receiver, commodity)
 * unless `ties.random` is set. Returns nothing when no candidate has a
 * positive weight.
 */
std::optional<ScheduledTransmission> select_cell_transmission(
    Variant variant, CellId cell, std::span<const NodeId> members,
    const Network& net, TieBreaker ties = {});

}  // namespace bwar

#endif  // BWAR_POLICY_HPP

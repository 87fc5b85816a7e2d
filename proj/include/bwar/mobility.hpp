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

#ifndef BWAR_MOBILITY_HPP
#define BWAR_MOBILITY_HPP

#include <vector>

#include "bwar/core.hpp"
#include "bwar/rng.hpp"

namespace bwar {

/**
 * Assignment of every node to a cell for one slot.
 *
 * Nodes move i.i.d.: each slot every node lands in any of the C cells with
 * probability 1/C, independent of its past and of the other nodes.
 */
class Placement {
 public:
  Placement() = default;
  Placement(Slot slot, int cells, std::vector<CellId> cell_of);

  Slot slot() const { return slot_; }
  int cells() const { return cells_; }
  int nodes() const { return static_cast<int>(cell_of_.size()); }
  CellId cell_of(NodeId n) const { return cell_of_[n]; }

  /// Nodes in `cell`, ascending by node id.
  const std::vector<NodeId>& members(CellId cell) const {
    return members_[cell];
  }

  bool same_cell(NodeId a, NodeId b) const {
    return cell_of_[a] == cell_of_[b];
  }

 private:
  Slot slot_ = 0;
  int cells_ = 0;
  std::vector<CellId> cell_of_;
  std::vector<std::vector<NodeId>> members_;
};

/// Draws one placement. Consumes exactly `nodes` draws, in node order.
Placement place(Rng& rng, int nodes, int cells, Slot slot = 0);

/// Free-function form of Placement::members.
inline const std::vector<NodeId>& members(const Placement& p, CellId cell) {
  return p.members(cell);
}

}  // namespace bwar

#endif  // BWAR_MOBILITY_HPP

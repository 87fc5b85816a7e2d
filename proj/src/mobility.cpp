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

#include "bwar/mobility.hpp"

#include <stdexcept>

namespace bwar {

Placement::Placement(Slot slot, int cells, std::vector<CellId> cell_of)
    : slot_(slot), cells_(cells), cell_of_(std::move(cell_of)),
      members_(static_cast<std::size_t>(cells)) {
  for (NodeId n = 0; n < cell_of_.size(); ++n) {
    if (cell_of_[n] >= static_cast<CellId>(cells)) {
      throw std::out_of_range("node placed outside the cell range");
    }
    members_[cell_of_[n]].push_back(n);  // ascending because n ascends
  }
}

Placement place(Rng& rng, int nodes, int cells, Slot slot) {
  std::vector<CellId> cell_of(static_cast<std::size_t>(nodes));
  for (auto& c : cell_of) {
    c = static_cast<CellId>(rng.uniform_below(static_cast<std::uint64_t>(cells)));
  }
  return Placement(slot, cells, std::move(cell_of));
}

}  // namespace bwar

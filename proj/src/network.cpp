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

#include "bwar/network.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bwar {

Packet PacketRegistry::admit(NodeId source, NodeId commodity, Slot t) {
  Packet p;
  p.id = static_cast<PacketId>(entries_.size());
  p.source = source;
  p.commodity = commodity;
  p.admit_time = t;
  p.kind = CopyKind::kOriginal;
  Entry e;
  e.commodity = commodity;
  e.admit_time = t;
  entries_.push_back(e);
  return p;
}

bool PacketRegistry::mark_delivered(PacketId id) {
  Entry& e = entries_[id];
  if (e.delivered) return false;
  e.delivered = true;
  ++delivered_count_;
  return true;
}

Network::Network(int nodes, int d_max)
    : nodes_(nodes), d_max_(d_max),
      states_(static_cast<std::size_t>(nodes)),
      q_(static_cast<std::size_t>(nodes) * nodes, 0),
      d_(static_cast<std::size_t>(nodes) * nodes, 0),
      load_(static_cast<std::size_t>(nodes), 0) {
  for (NodeId n = 0; n < static_cast<NodeId>(nodes); ++n) {
    states_[n].node = n;
    states_[n].partner = partner(n);
    states_[n].main_queues.resize(static_cast<std::size_t>(nodes));
    states_[n].dup_buffers.resize(static_cast<std::size_t>(nodes));
  }
}

Packet Network::admit(NodeId source, Slot t) {
  Packet p = registry_.admit(source, partner(source), t);
  push_main(source, p);
  return p;
}

bool Network::mark_delivered(PacketId id) {
  if (!registry_.mark_delivered(id)) return false;
  // Copies still queued elsewhere become stale from now on.
  stale_main_ += registry_.entry(id).main_copies;
  return true;
}

void Network::on_main_added(const Packet& p, int delta) {
  auto& e = registry_.entry(p.id);
  e.main_copies = static_cast<std::uint32_t>(static_cast<int>(e.main_copies) + delta);
  total_q_ += delta;
  if (e.delivered) stale_main_ += delta;
}

void Network::push_main(NodeId n, const Packet& p) {
  assert(p.commodity != n);
  Packet stored = p.as(CopyKind::kOriginal);
  states_[n].main_queues[p.commodity].push_back(stored);
  ++q_[index(n, p.commodity)];
  ++load_[n];
  on_main_added(stored, +1);
}

Packet Network::pop_main(NodeId n, NodeId c) {
  auto& queue = states_[n].main_queues[c];
  if (queue.empty()) throw std::logic_error("pop from empty main queue");
  Packet p = queue.front();
  queue.pop_front();
  --q_[index(n, c)];
  --load_[n];
  on_main_added(p, -1);
  return p;
}

bool Network::erase_main(NodeId n, NodeId c, PacketId id) {
  auto& queue = states_[n].main_queues[c];
  auto it = std::find_if(queue.begin(), queue.end(),
                         [id](const Packet& p) { return p.id == id; });
  if (it == queue.end()) return false;
  Packet p = *it;
  queue.erase(it);
  --q_[index(n, c)];
  --load_[n];
  on_main_added(p, -1);
  return true;
}

void Network::add_dup(NodeId n, const Packet& p) {
  assert(p.commodity != n);
  assert(p.kind != CopyKind::kOriginal);
  auto& buffer = states_[n].dup_buffers[p.commodity];
  if (static_cast<int>(buffer.size()) >= d_max_) {
    throw std::logic_error("duplicate buffer overflow");
  }
  buffer.push_back(p);
  ++d_[index(n, p.commodity)];
  ++load_[n];
  ++total_d_;
  ++dup_entries_;
  ++registry_.entry(p.id).dup_copies;
}

std::optional<Packet> Network::erase_dup(NodeId n, NodeId c, PacketId id) {
  auto& buffer = states_[n].dup_buffers[c];
  auto it = std::find_if(buffer.begin(), buffer.end(),
                         [id](const Packet& p) { return p.id == id; });
  if (it == buffer.end()) return std::nullopt;
  Packet p = *it;
  buffer.erase(it);
  --d_[index(n, c)];
  --load_[n];
  --total_d_;
  ++dup_exits_;
  --registry_.entry(id).dup_copies;
  return p;
}

bool Network::holds(NodeId n, NodeId c, PacketId id) const {
  if (dup_kind(n, c, id)) return true;
  if (registry_.entry(id).main_copies == 0) return false;
  const auto& queue = states_[n].main_queues[c];
  return std::any_of(queue.begin(), queue.end(),
                     [id](const Packet& p) { return p.id == id; });
}

std::optional<CopyKind> Network::dup_kind(NodeId n, NodeId c,
                                          PacketId id) const {
  for (const Packet& p : states_[n].dup_buffers[c]) {
    if (p.id == id) return p.kind;
  }
  return std::nullopt;
}

}  // namespace bwar

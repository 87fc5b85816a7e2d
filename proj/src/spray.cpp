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

#include "bwar/spray.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwar {

namespace {

auto by_id = [](const SprayCopy& copy, PacketId id) {
  return copy.packet.id < id;
};

}  // namespace

SprayNetwork::SprayNetwork(int nodes, int copies)
    : nodes_(nodes), copies_(copies),
      store_(static_cast<std::size_t>(nodes) * nodes),
      acknowledged_(static_cast<std::size_t>(nodes) * nodes) {}

void SprayNetwork::count(const Packet& p, int delta) {
  if (p.kind == CopyKind::kOriginal) {
    total_originals_ += delta;
    if (registry_.delivered(p.id)) stale_originals_ += delta;
  } else {
    total_relays_ += delta;
  }
}

Packet SprayNetwork::admit(NodeId source, Slot t) {
  Packet p = registry_.admit(source, partner(source), t);
  holders_.emplace_back();
  place_copy(source, p, copies_);
  return p;
}

void SprayNetwork::insert(NodeId n, const SprayCopy& copy) {
  CopyQueues& q = at(n, copy.packet.commodity);
  Queue& queue = copy.tokens > 1 ? q.sprayable : q.waiting;
  auto it = std::lower_bound(queue.begin(), queue.end(), copy.packet.id, by_id);
  queue.insert(it, copy);
}

void SprayNetwork::place_copy(NodeId n, const Packet& p, int tokens) {
  if (p.commodity == n) throw std::logic_error("copy placed at its destination");
  if (holds(n, p.id)) throw std::logic_error("node already holds this packet");
  insert(n, SprayCopy{p, tokens});
  holders_[p.id].push_back(n);
  count(p, +1);
  if (registry_.delivered(p.id)) {
    acknowledged_[static_cast<std::size_t>(n) * nodes_ + p.commodity].push_back(p.id);
  }
}

std::optional<SprayCopy> SprayNetwork::take(NodeId n, NodeId c, PacketId id) {
  CopyQueues& q = at(n, c);
  for (Queue* queue : {&q.sprayable, &q.waiting}) {
    auto it = std::lower_bound(queue->begin(), queue->end(), id, by_id);
    if (it != queue->end() && it->packet.id == id) {
      SprayCopy copy = *it;
      queue->erase(it);
      auto& h = holders_[id];
      h.erase(std::remove(h.begin(), h.end(), n), h.end());
      if (h.empty()) std::vector<NodeId>().swap(h);
      count(copy.packet, -1);
      return copy;
    }
  }
  return std::nullopt;
}

bool SprayNetwork::holds(NodeId n, PacketId id) const {
  if (id >= holders_.size()) return false;
  const auto& h = holders_[id];
  return std::find(h.begin(), h.end(), n) != h.end();
}

std::optional<int> SprayNetwork::tokens(NodeId n, PacketId id) const {
  if (!holds(n, id)) return std::nullopt;
  const CopyQueues& q = at(n, registry_.entry(id).commodity);
  for (const Queue* queue : {&q.sprayable, &q.waiting}) {
    auto it = std::lower_bound(queue->begin(), queue->end(), id, by_id);
    if (it != queue->end() && it->packet.id == id) return it->tokens;
  }
  return std::nullopt;
}

std::vector<SprayCopy> SprayNetwork::stored(NodeId n, NodeId c) const {
  const CopyQueues& q = at(n, c);
  std::vector<SprayCopy> out(q.sprayable.begin(), q.sprayable.end());
  out.insert(out.end(), q.waiting.begin(), q.waiting.end());
  std::sort(out.begin(), out.end(), [](const SprayCopy& x, const SprayCopy& y) {
    return x.packet.id < y.packet.id;
  });
  return out;
}

std::int64_t SprayNetwork::drop_acknowledged(std::span<const NodeId> members) {
  std::int64_t dropped = 0;
  for (NodeId a : members) {
    for (NodeId d : members) {
      if (a == d) continue;
      auto& acked = acknowledged_[static_cast<std::size_t>(a) * nodes_ + d];
      for (PacketId id : acked) {
        if (take(a, d, id)) ++dropped;
      }
      acked.clear();
    }
  }
  return dropped;
}

std::optional<ScheduledTransmission> SprayNetwork::select(
    CellId cell, std::span<const NodeId> members) const {
  if (members.size() < 2) return std::nullopt;

  ScheduledTransmission pick;
  pick.cell = cell;
  std::optional<PacketId> best;

  // Wait phase: a holder meets the destination.
  for (NodeId a : members) {
    for (NodeId d : members) {
      if (a == d) continue;
      const CopyQueues& q = at(a, d);
      for (const Queue* queue : {&q.sprayable, &q.waiting}) {
        if (queue->empty()) continue;
        PacketId id = queue->front().packet.id;
        if (!best || id < *best) {
          best = id;
          pick.sender = a;
          pick.receiver = d;
          pick.commodity = d;
        }
      }
    }
  }
  if (best) {
    pick.packet = best;
    return pick;
  }

  // Spray phase: oldest copy with spare tokens and a cell-mate without it.
  for (NodeId a : members) {
    for (NodeId c = 0; c < static_cast<NodeId>(nodes_); ++c) {
      const Queue& queue = at(a, c).sprayable;
      for (const SprayCopy& copy : queue) {
        if (best && copy.packet.id >= *best) break;
        std::optional<NodeId> receiver;
        for (NodeId b : members) {
          if (b != a && !holds(b, copy.packet.id)) {
            receiver = b;
            break;
          }
        }
        if (receiver) {
          best = copy.packet.id;
          pick.sender = a;
          pick.receiver = *receiver;
          pick.commodity = c;
          break;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  pick.packet = best;
  return pick;
}

SprayNetwork::CommitResult SprayNetwork::commit(ScheduledTransmission& tx) {
  if (!tx.packet) throw std::logic_error("spray transmission without a packet");
  const PacketId id = *tx.packet;
  CommitResult result;
  result.packet = id;

  if (tx.receiver == tx.commodity) {
    auto copy = take(tx.sender, tx.commodity, id);
    if (!copy) throw std::logic_error("scheduled copy is missing");
    tx.served_kind = copy->packet.kind;
    result.admit_time = copy->packet.admit_time;
    if (registry_.mark_delivered(id)) {
      result.delivered = true;
      for (NodeId h : holders_[id]) {
        if (h == copy->packet.source) ++stale_originals_;
        acknowledged_[static_cast<std::size_t>(h) * nodes_ + tx.commodity]
            .push_back(id);
      }
    }
    return result;
  }

  auto copy = take(tx.sender, tx.commodity, id);
  if (!copy || copy->tokens < 2) throw std::logic_error("nothing to spray");
  tx.served_kind = copy->packet.kind;
  result.admit_time = copy->packet.admit_time;
  const int given = copy->tokens / 2;
  copy->tokens -= given;
  // Back into the sender's storage with its reduced token count.
  insert(tx.sender, *copy);
  holders_[id].push_back(tx.sender);
  count(copy->packet, +1);
  place_copy(tx.receiver, copy->packet.as(CopyKind::kDuplicate), given);
  return result;
}

}  // namespace bwar

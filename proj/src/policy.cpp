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

#include "bwar/policy.hpp"

#include <limits>

namespace bwar {

LinkWeight bwar_weight(std::int64_t q_i, std::int64_t q_j, std::int64_t d_i,
                       std::int64_t d_j, bool j_is_dest, int d_max) {
  LinkWeight w;
  w.q_diff = q_i - q_j;
  w.dest_flag = j_is_dest && (q_i + d_i > 0);
  w.dup_diff = d_i - d_j;
  w.scaled_weight = 4 * std::int64_t{d_max} * w.q_diff +
                    (w.dest_flag ? 2 * std::int64_t{d_max} : 0) + w.dup_diff;
  return w;
}

namespace {

enum class WeightRule { kQueueOnly, kDestination, kFull };

WeightRule rule_for(Variant v) {
  if (v == Variant::kRb) return WeightRule::kQueueOnly;
  if (uses_duplicates(v)) return WeightRule::kFull;
  return WeightRule::kDestination;
}

}  // namespace

std::optional<ScheduledTransmission> select_cell_transmission(
    Variant variant, CellId cell, std::span<const NodeId> members,
    const Network& net, TieBreaker ties) {
  if (variant == Variant::kSnw || members.size() < 2) return std::nullopt;

  const WeightRule rule = rule_for(variant);
  const std::int64_t dm = net.d_max();
  // Ranking key: the link weight with the queue term on a radix wider than
  // the [-dm, 3dm] span of the tie-break terms. Same sign as the weight.
  const std::int64_t radix = 4 * dm + 1;
  const NodeId n_nodes = static_cast<NodeId>(net.nodes());

  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  std::uint64_t tied = 0;
  ScheduledTransmission pick;
  pick.cell = cell;

  for (NodeId a : members) {
    // A sender with nothing stored has no positive-weight link.
    if (net.load(a) == 0) continue;
    const int* qa = net.q_row(a).data();
    const int* da = net.d_row(a).data();
    for (NodeId b : members) {
      if (b == a) continue;
      const int* qb = net.q_row(b).data();
      const int* db = net.d_row(b).data();
      for (NodeId c = 0; c < n_nodes; ++c) {
        if (c == a) continue;
        std::int64_t w;
        switch (rule) {
          case WeightRule::kQueueOnly:
            w = rb_weight(qa[c], qb[c]);
            break;
          case WeightRule::kDestination:
            w = 4 * (qa[c] - qb[c]) + ((c == b && qa[c] > 0) ? 2 : 0);
            break;
          case WeightRule::kFull:
          default:
            w = radix * (qa[c] - qb[c]) +
                ((c == b && qa[c] + da[c] > 0) ? 2 * dm : 0) + (da[c] - db[c]);
            break;
        }
        if (w > best) {
          best = w;
          tied = 1;
          pick.sender = a;
          pick.receiver = b;
          pick.commodity = c;
        } else if (w == best && ties.random && ties.rng != nullptr) {
          ++tied;
          if (ties.rng->uniform_below(tied) == 0) {
            pick.sender = a;
            pick.receiver = b;
            pick.commodity = c;
          }
        }
      }
    }
  }
  if (best <= 0) return std::nullopt;
  return pick;
}

}  // namespace bwar

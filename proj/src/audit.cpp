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

// Slot-boundary invariant audit. Everything here is recomputed from the
// stored packets, independent of the incremental counters it checks.

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "bwar/engine.hpp"

namespace bwar {

namespace {

template <typename... Args>
std::string msg(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

void audit_transmissions(const Simulator& sim, std::vector<std::string>& out) {
  const Placement& pl = sim.placement();
  std::vector<int> per_cell(static_cast<std::size_t>(pl.cells()), 0);
  for (const TransmissionRecord& r : sim.last_transmissions()) {
    const auto& tx = r.tx;
    if (tx.cell >= static_cast<CellId>(pl.cells())) {
      out.push_back(msg("transmission in unknown cell ", tx.cell));
      continue;
    }
    if (++per_cell[tx.cell] > 1) {
      out.push_back(msg("cell ", tx.cell, " transmitted more than once"));
    }
    if (tx.sender == tx.receiver) {
      out.push_back(msg("node ", tx.sender, " transmitted to itself"));
    }
    if (pl.cell_of(tx.sender) != tx.cell || pl.cell_of(tx.receiver) != tx.cell) {
      out.push_back(msg("transmission ", tx.sender, "->", tx.receiver,
                        " leaves cell ", tx.cell));
    }
    if (!tx.served_kind) {
      out.push_back(msg("transmission ", tx.sender, "->", tx.receiver,
                        " served nothing"));
    } else if (sim.config().variant != Variant::kSnw &&
               *tx.served_kind != CopyKind::kOriginal &&
               r.sender_main_before != 0) {
      out.push_back(msg("node ", tx.sender, " served a duplicate of commodity ",
                        tx.commodity, " with ", r.sender_main_before,
                        " originals queued"));
    }
  }
  if (sim.last_transmissions().size() > static_cast<std::size_t>(pl.cells())) {
    out.push_back("more transmissions than cells");
  }
}

void audit_backpressure(const Simulator& sim, std::vector<std::string>& out) {
  const Network& net = sim.network();
  const SimConfig& cfg = sim.config();
  const Slot t = sim.slot();
  const auto& reg = net.registry();
  const NodeId n_nodes = static_cast<NodeId>(net.nodes());
  const bool ideal =
      cfg.variant == Variant::kBwarIm || cfg.variant == Variant::kBwarId;

  std::int64_t total_q = 0, total_d = 0, stale = 0;
  std::vector<char> durable(static_cast<std::size_t>(reg.admitted()), 0);
  std::unordered_set<PacketId> seen;

  for (NodeId n = 0; n < n_nodes; ++n) {
    const NodeState& st = net.node(n);
    for (NodeId c = 0; c < n_nodes; ++c) {
      const auto& mq = st.main_queues[c];
      const auto& db = st.dup_buffers[c];
      if (c == n && (!mq.empty() || !db.empty())) {
        out.push_back(msg("node ", n, " stores packets addressed to itself"));
      }
      if (static_cast<int>(db.size()) > net.d_max()) {
        out.push_back(msg("D(", n, ",", c, ")=", db.size(), " exceeds D_max"));
      }
      if (net.q(n, c) != static_cast<int>(mq.size()) ||
          net.d(n, c) != static_cast<int>(db.size())) {
        out.push_back(msg("occupancy counters out of step at (", n, ",", c, ")"));
      }
      total_q += static_cast<std::int64_t>(mq.size());
      total_d += static_cast<std::int64_t>(db.size());

      seen.clear();
      auto check = [&](const Packet& p, bool in_main) {
        if (p.commodity != c) {
          out.push_back(msg("packet ", p.id, " filed under wrong commodity"));
        }
        if (!seen.insert(p.id).second) {
          out.push_back(msg("packet ", p.id, " stored twice at node ", n));
        }
        if (in_main && p.kind != CopyKind::kOriginal) {
          out.push_back(msg("non-original ", p.id, " in main queue of ", n));
        }
        if (!in_main && p.kind == CopyKind::kOriginal) {
          out.push_back(msg("plain original ", p.id, " in duplicate buffer of ", n));
        }
        const bool delivered = reg.delivered(p.id);
        if (delivered && in_main) ++stale;
        if (ideal && delivered) {
          out.push_back(msg("copy of delivered packet ", p.id, " survives at ", n));
        }
        if (cfg.variant == Variant::kBwarTd && p.kind == CopyKind::kDuplicate &&
            (t - p.admit_time) >= cfg.effective_timeout()) {
          out.push_back(msg("expired duplicate ", p.id, " survives at ", n));
        }
        if (!delivered && p.kind != CopyKind::kDuplicate) durable[p.id] = 1;
      };
      for (const Packet& p : mq) check(p, true);
      for (const Packet& p : db) check(p, false);
    }
  }

  if (total_q != net.total_q() || total_d != net.total_d()) {
    out.push_back("network totals out of step with storage");
  }
  if (stale != net.stale_main()) {
    out.push_back(msg("stale main-queue count ", net.stale_main(),
                      " but storage has ", stale));
  }
  if (!uses_duplicates(cfg.variant) && total_d != 0) {
    out.push_back("duplicate buffer used by a variant without redundancy");
  }
  if (net.dup_entries() - net.dup_exits() != net.total_d()) {
    out.push_back("duplicate-buffer ledger does not balance");
  }
  const auto live = std::count(durable.begin(), durable.end(), char{1});
  if (reg.admitted() != reg.delivered_count() + live) {
    out.push_back(msg("conservation: admitted ", reg.admitted(), " != delivered ",
                      reg.delivered_count(), " + undelivered ", live));
  }
}

void audit_spray(const Simulator& sim, std::vector<std::string>& out) {
  const SprayNetwork& sp = sim.spray();
  const auto& reg = sp.registry();
  const int copies = sp.copies();
  std::int64_t undelivered_with_source = 0;
  for (PacketId id = 0; id < static_cast<PacketId>(reg.admitted()); ++id) {
    const auto& holders = sp.holders(id);
    int tokens = 0;
    for (NodeId h : holders) tokens += sp.tokens(h, id).value_or(0);
    if (tokens > copies) {
      out.push_back(msg("packet ", id, " holds ", tokens, " tokens"));
    }
    if (!reg.delivered(id)) {
      const NodeId source = partner(reg.entry(id).commodity);
      if (sp.holds(source, id)) ++undelivered_with_source;
    }
  }
  if (reg.admitted() != reg.delivered_count() + undelivered_with_source) {
    out.push_back("conservation: an undelivered packet lost its source copy");
  }
}

}  // namespace

std::vector<std::string> audit(const Simulator& sim) {
  std::vector<std::string> out;
  audit_transmissions(sim, out);
  if (sim.config().variant == Variant::kSnw) {
    audit_spray(sim, out);
  } else {
    audit_backpressure(sim, out);
  }
  return out;
}

}  // namespace bwar

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

#include "bwar/engine.hpp"

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

namespace bwar {

namespace {

constexpr std::size_t kMaxStoredViolations = 64;

bool is_spray(const SimConfig& cfg) { return cfg.variant == Variant::kSnw; }

}  // namespace

Simulator::Simulator(const SimConfig& cfg)
    : cfg_(validate_config(cfg)),
      rngs_(cfg_.seed),
      net_(is_spray(cfg_) ? 0 : cfg_.nodes, cfg_.d_max),
      spray_(is_spray(cfg_) ? cfg_.nodes : 0, cfg_.effective_snw_copies()) {
  samples_.stride = cfg_.sample_stride;
  samples_.q_series.reserve(
      static_cast<std::size_t>(cfg_.slots / cfg_.sample_stride + 1));
}

void Simulator::step() {
  const Slot t = slot_;
  placement_ = place(rngs_.mobility, cfg_.nodes, cfg_.cells, t);
  transmissions_.clear();
  delivered_now_.clear();

  if (is_spray(cfg_)) {
    step_spray(t);
  } else {
    step_backpressure(t);
  }
  admit_arrivals(t);
  sample(t);

  if (cfg_.audit) {
    for (std::string& v : audit(*this)) {
      ++violation_count_;
      if (violations_.size() < kMaxStoredViolations) {
        violations_.push_back("slot " + std::to_string(t) + ": " + std::move(v));
      }
    }
  }
  ++slot_;
}

void Simulator::run_to_end() {
  while (slot_ < cfg_.slots) step();
}

void Simulator::step_backpressure(Slot t) {
  const Variant v = cfg_.variant;
  const CellId n_cells = static_cast<CellId>(cfg_.cells);

  if (v == Variant::kBwarTd) {
    for (CellId cell = 0; cell < n_cells; ++cell) {
      const auto& m = placement_.members(cell);
      for (NodeId holder : m) {
        for (NodeId dest : m) {
          if (holder != dest && net_.d(holder, dest) > 0) {
            flagged_encounter_resolution(net_, placement_, holder, dest);
          }
        }
      }
    }
  }

  // Decide every cell on the same snapshot, then commit in cell order.
  std::vector<ScheduledTransmission> decisions;
  TieBreaker ties{cfg_.random_tie_break, &rngs_.ties};
  for (CellId cell = 0; cell < n_cells; ++cell) {
    if (auto tx = select_cell_transmission(v, cell, placement_.members(cell),
                                           net_, ties)) {
      decisions.push_back(*tx);
    }
  }
  for (const ScheduledTransmission& tx : decisions) commit(tx, t);

  if (v == Variant::kBwarIm || v == Variant::kBwarId) {
    for (PacketId id : delivered_now_) ledger_ += ideal_purge(net_, id);
  } else if (v == Variant::kBwarTd) {
    ledger_ += timeout_sweep(net_, t, cfg_.effective_timeout());
  }
}

void Simulator::commit(ScheduledTransmission tx, Slot t) {
  const NodeId a = tx.sender;
  const NodeId b = tx.receiver;
  const NodeId c = tx.commodity;

  TransmissionRecord rec;
  rec.sender_main_before = net_.q(a, c);

  if (net_.q(a, c) > 0) {
    const Packet head = net_.node(a).main_queues[c].front();
    rec.packet = head.id;
    tx.served_kind = CopyKind::kOriginal;
    ++samples_.original_transmissions;
    if (b == c) {
      net_.pop_main(a, c);
      deliver(head, t, rec);
    } else {
      const bool room =
          uses_duplicates(cfg_.variant) &&
          duplicate_target_has_room(cfg_.variant, net_, a, b, head);
      auto ev = maybe_duplicate(cfg_.variant, a, b, head, net_.q(a, c) - 1,
                                net_.d(a, c), room, cfg_.q_th, cfg_.d_max, t);
      if (ev) {
        rec.duplicated = true;
        ++duplications_;
      }
      if (ev && ev->placement == TwinPlacement::kReceiverDuplicate) {
        receive_copy(b, head.as(CopyKind::kDuplicate));
      } else {
        net_.pop_main(a, c);
        if (ev) net_.add_dup(a, head.as(CopyKind::kFlaggedOriginal));
        receive_original(b, head);
      }
    }
  } else {
    // Strictly lower priority: only reached with an empty main queue.
    const Packet copy = net_.front_dup(a, c);
    rec.packet = copy.id;
    tx.served_kind = copy.kind;
    ++samples_.duplicate_transmissions;
    if (b == c) {
      deliver(copy, t, rec);
    } else {
      receive_copy(b, copy.as(CopyKind::kDuplicate));
    }
  }
  ++samples_.transmissions;
  rec.tx = tx;
  transmissions_.push_back(rec);
}

void Simulator::deliver(const Packet& p, Slot t, TransmissionRecord& rec) {
  if (!net_.mark_delivered(p.id)) return;
  rec.delivered = true;
  delivered_now_.push_back(p.id);
  ++samples_.delivered;
  if (p.admit_time >= cfg_.warmup) {
    samples_.delay_sum += t - p.admit_time;
    ++samples_.delay_count;
  }
}

void Simulator::receive_original(NodeId b, const Packet& p) {
  const NodeId c = p.commodity;
  // The arriving Original supersedes any lower-priority copy held here.
  if (net_.dup_kind(b, c, p.id)) net_.erase_dup(b, c, p.id);
  if (net_.holds(b, c, p.id)) return;  // b already queues this Original
  net_.push_main(b, p.as(CopyKind::kOriginal));
}

void Simulator::receive_copy(NodeId b, const Packet& p) {
  const NodeId c = p.commodity;
  if (!net_.dup_has_room(b, c) || net_.holds(b, c, p.id)) return;
  net_.add_dup(b, p);
}

void Simulator::step_spray(Slot t) {
  const CellId n_cells = static_cast<CellId>(cfg_.cells);
  for (CellId cell = 0; cell < n_cells; ++cell) {
    spray_.drop_acknowledged(placement_.members(cell));
  }
  std::vector<ScheduledTransmission> decisions;
  for (CellId cell = 0; cell < n_cells; ++cell) {
    if (auto tx = spray_.select(cell, placement_.members(cell))) {
      decisions.push_back(*tx);
    }
  }
  for (ScheduledTransmission tx : decisions) {
    TransmissionRecord rec;
    auto result = spray_.commit(tx);
    rec.tx = tx;
    rec.packet = result.packet;
    ++samples_.transmissions;
    if (tx.served_kind == CopyKind::kOriginal) {
      ++samples_.original_transmissions;
    } else {
      ++samples_.duplicate_transmissions;
    }
    if (result.delivered) {
      rec.delivered = true;
      ++samples_.delivered;
      if (result.admit_time >= cfg_.warmup) {
        samples_.delay_sum += t - result.admit_time;
        ++samples_.delay_count;
      }
    }
    transmissions_.push_back(rec);
  }
}

void Simulator::admit_arrivals(Slot t) {
  for (NodeId n = 0; n < static_cast<NodeId>(cfg_.nodes); ++n) {
    if (!rngs_.arrivals.bernoulli(cfg_.lambda)) continue;
    if (is_spray(cfg_)) {
      spray_.admit(n, t);
    } else {
      net_.admit(n, t);
    }
    ++samples_.admitted;
  }
}

void Simulator::sample(Slot t) {
  std::int64_t q, u, d;
  if (is_spray(cfg_)) {
    q = spray_.total_originals();
    u = spray_.undelivered_originals();
    d = spray_.total_relays();
  } else {
    q = net_.total_q();
    u = net_.undelivered_main();
    d = net_.total_d();
  }
  if (t >= cfg_.warmup) {
    ++samples_.observed_slots;
    samples_.sum_q += q;
    samples_.sum_u += u;
    samples_.sum_d += d;
  }
  if (t % cfg_.sample_stride == 0) samples_.q_series.push_back(q);
  samples_.slots_run = t + 1;
}

MetricsReport run(const SimConfig& cfg) {
  Simulator sim(cfg);
  sim.run_to_end();
  return sim.report();
}

int default_workers() {
  if (const char* env = std::getenv("BWAR_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<MetricsReport> run_batch(std::span<const SimConfig> configs,
                                     int workers) {
  std::vector<MetricsReport> out(configs.size());
  if (workers <= 0) workers = default_workers();
  workers = std::min<int>(workers, static_cast<int>(configs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i) out[i] = run(configs[i]);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(configs.size());
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
          try {
            out[i] = run(configs[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace bwar

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

#ifndef BWAR_CORE_HPP
#define BWAR_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bwar {

using NodeId = std::uint32_t;
using CellId = std::uint32_t;
using PacketId = std::uint64_t;
using Slot = std::int64_t;

/// Protocol variants compared by the simulator.
enum class Variant {
  kRb,      // plain queue-differential backpressure
  kRbDa,    // backpressure with destination advantage
  kBwarIm,  // adaptive redundancy, ideal removal, original stays in main queue
  kBwarId,  // adaptive redundancy, ideal removal, original moved to duplicate buffer
  kBwarTd,  // adaptive redundancy, timeout removal, flagged original
  kSnw,     // binary Spray and Wait
};

inline constexpr Variant kAllVariants[] = {Variant::kRb,     Variant::kRbDa,
                                           Variant::kBwarIm, Variant::kBwarId,
                                           Variant::kBwarTd, Variant::kSnw};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// True for the three variants that maintain duplicate buffers.
bool uses_duplicates(Variant v);
/// True when the scheduler prefers links whose receiver is the commodity.
bool has_destination_advantage(Variant v);

enum class CopyKind : std::uint8_t { kOriginal, kDuplicate, kFlaggedOriginal };

std::string_view to_string(CopyKind k);

struct Packet {
  PacketId id = 0;
  NodeId source = 0;
  NodeId commodity = 0;  // final destination
  Slot admit_time = 0;
  CopyKind kind = CopyKind::kOriginal;

  /// Same packet (all copies share id and admission stamp), any kind.
  Packet as(CopyKind k) const {
    Packet p = *this;
    p.kind = k;
    return p;
  }
};

struct SimConfig {
  int cells = 25;
  int nodes = 44;
  double lambda = 0.001;
  Variant variant = Variant::kRb;
  int q_th = 1;
  int d_max = 1;
  std::optional<int> timeout;     // defaults to `cells`
  std::optional<int> snw_copies;  // defaults to ceil(nodes / 10)
  Slot slots = 100000;
  std::uint64_t seed = 1;
  Slot warmup = 0;

  // Residual scheduler ties are broken lexicographically unless set.
  bool random_tie_break = false;
  // Occupancy time series is recorded every `sample_stride` slots.
  int sample_stride = 10;
  // Stability verdict: occupancy growth slope (packets/slot) must stay below.
  double slope_tol = 1e-3;
  // Run the per-slot invariant audit and keep the violations.
  bool audit = false;

  int effective_timeout() const { return timeout.value_or(cells); }
  int effective_snw_copies() const {
    return snw_copies.value_or((nodes + 9) / 10);
  }
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns `cfg` unchanged when it is runnable; throws ConfigError otherwise.
SimConfig validate_config(SimConfig cfg);

/// Nodes pair up as 2i <-> 2i+1 and send traffic only to their partner.
constexpr NodeId partner(NodeId n) { return n ^ 1u; }

/// Node count that maximizes cell-partitioned throughput for `cells` cells,
/// N ~ 1.79 C rounded to an even count. The five tabulated network sizes
/// return their published node counts.
int recommended_nodes(int cells);

}  // namespace bwar

#endif  // BWAR_CORE_HPP

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

#include "bwar/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bwar {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kRb: return "RB";
    case Variant::kRbDa: return "RB-DA";
    case Variant::kBwarIm: return "BWAR-IM";
    case Variant::kBwarId: return "BWAR-ID";
    case Variant::kBwarTd: return "BWAR-TD";
    case Variant::kSnw: return "SNW";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == name) return v;
  }
  if (name == "S&W" || name == "SW") return Variant::kSnw;
  return std::nullopt;
}

bool uses_duplicates(Variant v) {
  return v == Variant::kBwarIm || v == Variant::kBwarId ||
         v == Variant::kBwarTd;
}

bool has_destination_advantage(Variant v) {
  return v != Variant::kRb && v != Variant::kSnw;
}

std::string_view to_string(CopyKind k) {
  switch (k) {
    case CopyKind::kOriginal: return "Original";
    case CopyKind::kDuplicate: return "Duplicate";
    case CopyKind::kFlaggedOriginal: return "FlaggedOriginal";
  }
  return "?";
}

namespace {

[[noreturn]] void reject(const std::string& what) { throw ConfigError(what); }

}  // namespace

SimConfig validate_config(SimConfig cfg) {
  if (cfg.cells <= 0) reject("cells must be positive");
  if (cfg.nodes <= 0) reject("nodes must be positive");
  if (cfg.nodes % 2 != 0) {
    std::ostringstream os;
    os << "odd node count " << cfg.nodes << ": nodes are organized in pairs";
    reject(os.str());
  }
  if (!(cfg.lambda >= 0.0 && cfg.lambda <= 1.0)) {
    std::ostringstream os;
    os << "arrival rate " << cfg.lambda << " is not a probability in [0, 1]";
    reject(os.str());
  }
  if (cfg.q_th < 0) reject("q_th must be nonnegative");
  if (cfg.d_max <= 0) reject("d_max must be positive");
  if (cfg.timeout && *cfg.timeout <= 0) reject("timeout must be positive");
  if (cfg.snw_copies && *cfg.snw_copies <= 0) {
    reject("snw copies must be positive");
  }
  if (cfg.slots <= 0) reject("slots must be positive");
  if (cfg.warmup < 0) reject("warmup must be nonnegative");
  if (cfg.warmup >= cfg.slots) reject("warmup must be shorter than the run");
  if (cfg.sample_stride <= 0) reject("sample stride must be positive");
  if (!(cfg.slope_tol > 0.0)) reject("slope tolerance must be positive");
  return cfg;
}

int recommended_nodes(int cells) {
  switch (cells) {
    case 9: return 16;
    case 12: return 20;
    case 16: return 28;
    case 20: return 34;
    case 25: return 44;
    default: break;
  }
  int n = 2 * static_cast<int>(std::lround(1.79 * cells / 2.0));
  return std::max(n, 2);
}

}  // namespace bwar

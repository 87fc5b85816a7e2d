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

// Reference cell scheduler for tests. It filters the full candidate list one
// rule at a time over plain occupancy tables and never touches the weight
// encoding used by the library.

#ifndef BWAR_TESTS_SCHEDULER_ORACLE_HPP
#define BWAR_TESTS_SCHEDULER_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "bwar/core.hpp"
#include "bwar/network.hpp"
#include "bwar/policy.hpp"

namespace bwar::testing {

struct Occupancy {
  int nodes = 0;
  int d_max = 1;
  std::vector<std::vector<int>> q;  // q[n][c]
  std::vector<std::vector<int>> d;  // d[n][c]
};

struct Candidate {
  NodeId a, b, c;
  auto key() const { return std::tie(a, b, c); }
  friend bool operator==(const Candidate& x, const Candidate& y) {
    return x.key() == y.key();
  }
};

struct OracleResult {
  std::optional<Candidate> pick;  // lexicographic first of `ties`
  std::vector<Candidate> ties;    // candidates left after every rule
};

inline OracleResult oracle_select(Variant v, const std::vector<NodeId>& cell,
                                  const Occupancy& occ) {
  OracleResult out;
  if (v == Variant::kSnw || cell.size() < 2) return out;
  const bool bwar = uses_duplicates(v);
  const bool dest_rule = v != Variant::kRb;
  auto Q = [&](NodeId n, NodeId c) { return occ.q[n][c]; };
  auto D = [&](NodeId n, NodeId c) { return bwar ? occ.d[n][c] : 0; };

  std::vector<Candidate> all;
  for (NodeId a : cell) {
    for (NodeId b : cell) {
      if (a == b) continue;
      for (NodeId c = 0; c < static_cast<NodeId>(occ.nodes); ++c) {
        all.push_back({a, b, c});
      }
    }
  }

  // Rule 1: largest main-queue differential.
  int best = Q(all[0].a, all[0].c) - Q(all[0].b, all[0].c);
  for (const auto& x : all) best = std::max(best, Q(x.a, x.c) - Q(x.b, x.c));
  std::vector<Candidate> s;
  for (const auto& x : all) {
    if (Q(x.a, x.c) - Q(x.b, x.c) == best) s.push_back(x);
  }

  // Rule 2: prefer a receiver that is the commodity's destination, as long
  // as the sender has something of that commodity to send.
  bool dest_win = false;
  if (dest_rule) {
    std::vector<Candidate> dest;
    for (const auto& x : s) {
      if (x.b == x.c && Q(x.a, x.c) + D(x.a, x.c) > 0) dest.push_back(x);
    }
    if (!dest.empty()) {
      s = dest;
      dest_win = true;
    }
  }

  // Rule 3: among the rest, largest combined (main + duplicate) differential.
  int best_dd = 0;
  if (bwar) {
    best_dd = D(s[0].a, s[0].c) - D(s[0].b, s[0].c);
    for (const auto& x : s) best_dd = std::max(best_dd, D(x.a, x.c) - D(x.b, x.c));
    std::erase_if(s, [&](const Candidate& x) {
      return D(x.a, x.c) - D(x.b, x.c) != best_dd;
    });
  }

  // Idle unless the winner is worth a transmission: a positive main-queue
  // differential, or (with redundancy) a tie at zero broken by a destination
  // encounter or a positive duplicate differential.
  bool useful = best > 0;
  if (best == 0 && dest_win) useful = true;
  if (best == 0 && bwar && best_dd > 0) useful = true;
  if (!useful) return out;

  std::sort(s.begin(), s.end(),
            [](const Candidate& x, const Candidate& y) { return x.key() < y.key(); });
  out.ties = s;
  out.pick = s.front();
  return out;
}

/// Builds a Network holding exactly the occupancies in `occ`.
inline Network make_network(const Occupancy& occ) {
  Network net(occ.nodes, occ.d_max);
  auto& reg = net.registry();
  for (NodeId n = 0; n < static_cast<NodeId>(occ.nodes); ++n) {
    for (NodeId c = 0; c < static_cast<NodeId>(occ.nodes); ++c) {
      for (int k = 0; k < occ.q[n][c]; ++k) {
        net.push_main(n, reg.admit(n, c, 0));
      }
      for (int k = 0; k < occ.d[n][c]; ++k) {
        net.add_dup(n, reg.admit(n, c, 0).as(CopyKind::kDuplicate));
      }
    }
  }
  return net;
}

/// Random instance: up to `max_nodes` nodes, a random cell subset, and
/// occupancies in [0, max_occ] (none addressed to the holder itself).
struct Instance {
  Occupancy occ;
  std::vector<NodeId> cell;
};

inline Instance random_instance(std::mt19937_64& gen, int max_nodes, int max_occ,
                                int d_max) {
  Instance inst;
  std::uniform_int_distribution<int> n_dist(2, max_nodes);
  std::uniform_int_distribution<int> q_dist(0, max_occ);
  std::uniform_int_distribution<int> d_dist(0, std::min(max_occ, d_max));
  std::bernoulli_distribution coin(0.5);
  const int n = n_dist(gen);
  inst.occ.nodes = n;
  inst.occ.d_max = d_max;
  inst.occ.q.assign(n, std::vector<int>(n, 0));
  inst.occ.d.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) {
      if (i == c) continue;
      inst.occ.q[i][c] = q_dist(gen);
      inst.occ.d[i][c] = d_dist(gen);
    }
  }
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i) {
    if (coin(gen)) inst.cell.push_back(i);
  }
  return inst;
}

inline std::optional<Candidate> as_candidate(
    const std::optional<ScheduledTransmission>& tx) {
  if (!tx) return std::nullopt;
  return Candidate{tx->sender, tx->receiver, tx->commodity};
}

}  // namespace bwar::testing

#endif  // BWAR_TESTS_SCHEDULER_ORACLE_HPP

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

#ifndef BWAR_RNG_HPP
#define BWAR_RNG_HPP

#include <cstdint>
#include <random>

namespace bwar {

/// Seedable mt19937_64 stream.
///
/// The standard distributions are implementation-defined, so the two
/// draws the simulator needs are implemented here on top of the raw
/// engine output. That keeps runs bit-identical across standard libraries.
class Rng {
 public:
  /// Independent stream `stream` derived from `seed` via std::seed_seq.
  Rng(std::uint64_t seed, std::uint32_t stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Bernoulli draw with success probability p (53-bit resolution).
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// Stream assignment: every consumer has its own stream so changing how
/// many draws one consumer makes never perturbs the others.
enum class Stream : std::uint32_t {
  kMobility = 1,
  kArrivals = 2,
  kTieBreak = 3,
};

struct RngStreams {
  explicit RngStreams(std::uint64_t seed)
      : mobility(seed, static_cast<std::uint32_t>(Stream::kMobility)),
        arrivals(seed, static_cast<std::uint32_t>(Stream::kArrivals)),
        ties(seed, static_cast<std::uint32_t>(Stream::kTieBreak)) {}

  Rng mobility;
  Rng arrivals;
  Rng ties;
};

}  // namespace bwar

#endif  // BWAR_RNG_HPP

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

#ifndef BWAR_METRICS_HPP
#define BWAR_METRICS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bwar/core.hpp"

namespace bwar {

/// Raw per-run accumulators filled by the engine.
struct RunSamples {
  // Occupancy sums over the slots at or after warmup.
  std::int64_t observed_slots = 0;
  std::int64_t sum_q = 0;  // main-queue packets
  std::int64_t sum_u = 0;  // main-queue packets not yet delivered
  std::int64_t sum_d = 0;  // duplicate-buffer (or relay) copies

  // Total main-queue occupancy at every `stride`-th slot of the whole run.
  int stride = 1;
  std::vector<std::int64_t> q_series;

  // Delay of first deliveries of packets admitted at or after warmup.
  std::int64_t delay_sum = 0;
  std::int64_t delay_count = 0;

  std::int64_t slots_run = 0;
  std::int64_t admitted = 0;
  std::int64_t delivered = 0;
  std::int64_t transmissions = 0;
  std::int64_t original_transmissions = 0;
  std::int64_t duplicate_transmissions = 0;
};

struct MetricsReport {
  std::optional<double> mean_delay;  // empty when nothing was delivered
  std::int64_t delivered = 0;
  std::int64_t admitted = 0;
  double mean_q = 0.0;
  double mean_u = 0.0;
  double mean_d = 0.0;
  std::int64_t transmissions = 0;
  std::int64_t original_transmissions = 0;
  std::int64_t duplicate_transmissions = 0;
  double growth_slope = 0.0;  // packets per slot
  bool stable = true;

  /// Deliveries per slot over the whole run.
  double delivery_rate(std::int64_t slots) const {
    return slots > 0 ? static_cast<double>(delivered) / static_cast<double>(slots)
                     : 0.0;
  }
};

/// Least-squares slope of y against x. Zero for fewer than two points.
double regression_slope(std::span<const double> x, std::span<const double> y);

/// Slope of a strided occupancy series over its final half.
double tail_growth_slope(std::span<const std::int64_t> series, int stride);

MetricsReport finalize(const RunSamples& samples, const SimConfig& cfg);

// --- stability sweeps ----------------------------------------------------

struct SweepPoint {
  double lambda = 0.0;
  MetricsReport report;
};

enum class ThresholdFlag {
  kBracketed,    // a stable point is followed by an unstable one
  kAllStable,    // threshold lies above the grid
  kAllUnstable,  // threshold lies below the grid
};

std::string_view to_string(ThresholdFlag f);

struct SweepResult {
  std::vector<SweepPoint> grid;  // ascending lambda
  std::optional<double> threshold;
  ThresholdFlag flag = ThresholdFlag::kBracketed;
  // A stable point was found above the first unstable one.
  bool monotonicity_violated = false;
};

/// Threshold = midpoint of the last stable point before the first unstable
/// one and that unstable point. Sorts the grid by lambda.
SweepResult summarize_sweep(std::vector<SweepPoint> grid);

/// Evenly spaced grid of `points` rates from lo to hi inclusive.
std::vector<double> lambda_grid(double lo, double hi, int points);

/// Runs `tmpl` at every grid rate (slots overridden) and summarizes.
/// `workers` <= 0 selects default_workers().
SweepResult estimate_stability_threshold(const SimConfig& tmpl, double lo,
                                         double hi, int points, Slot slots,
                                         int workers = 0);

// --- CSV -----------------------------------------------------------------

struct RunRecord {
  std::string experiment;
  SimConfig cfg;
  MetricsReport report;
};

std::string csv_header();
std::string csv_row(const RunRecord& r);
std::string format_csv(std::span<const RunRecord> rows);
/// Throws std::runtime_error naming the path on I/O failure.
void write_csv(std::span<const RunRecord> rows, const std::filesystem::path& path);

}  // namespace bwar

#endif  // BWAR_METRICS_HPP

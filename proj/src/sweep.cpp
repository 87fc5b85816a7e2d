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
#include "bwar/metrics.hpp"

namespace bwar {

SweepResult estimate_stability_threshold(const SimConfig& tmpl, double lo,
                                         double hi, int points, Slot slots,
                                         int workers) {
  const std::vector<double> grid = lambda_grid(lo, hi, points);
  std::vector<SimConfig> configs;
  configs.reserve(grid.size());
  for (double lambda : grid) {
    SimConfig cfg = tmpl;
    cfg.lambda = lambda;
    cfg.slots = slots;
    if (cfg.warmup >= slots) cfg.warmup = 0;
    configs.push_back(validate_config(cfg));
  }
  std::vector<MetricsReport> reports = run_batch(configs, workers);
  std::vector<SweepPoint> points_out;
  points_out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    points_out.push_back(SweepPoint{grid[i], reports[i]});
  }
  return summarize_sweep(std::move(points_out));
}

}  // namespace bwar

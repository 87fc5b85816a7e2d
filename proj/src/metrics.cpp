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

#include "bwar/metrics.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace bwar {

double regression_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

double tail_growth_slope(std::span<const std::int64_t> series, int stride) {
  const std::size_t begin = series.size() / 2;
  std::vector<double> x, y;
  x.reserve(series.size() - begin);
  y.reserve(series.size() - begin);
  for (std::size_t i = begin; i < series.size(); ++i) {
    x.push_back(static_cast<double>(i) * stride);
    y.push_back(static_cast<double>(series[i]));
  }
  return regression_slope(x, y);
}

MetricsReport finalize(const RunSamples& s, const SimConfig& cfg) {
  MetricsReport r;
  if (s.delay_count > 0) {
    r.mean_delay =
        static_cast<double>(s.delay_sum) / static_cast<double>(s.delay_count);
  }
  r.delivered = s.delivered;
  r.admitted = s.admitted;
  if (s.observed_slots > 0) {
    const auto slots = static_cast<double>(s.observed_slots);
    r.mean_q = static_cast<double>(s.sum_q) / slots;
    r.mean_u = static_cast<double>(s.sum_u) / slots;
    r.mean_d = static_cast<double>(s.sum_d) / slots;
  }
  r.transmissions = s.transmissions;
  r.original_transmissions = s.original_transmissions;
  r.duplicate_transmissions = s.duplicate_transmissions;
  r.growth_slope = tail_growth_slope(s.q_series, s.stride);
  r.stable = r.growth_slope < cfg.slope_tol;
  return r;
}

std::string_view to_string(ThresholdFlag f) {
  switch (f) {
    case ThresholdFlag::kBracketed: return "bracketed";
    case ThresholdFlag::kAllStable: return "all-stable";
    case ThresholdFlag::kAllUnstable: return "all-unstable";
  }
  return "?";
}

SweepResult summarize_sweep(std::vector<SweepPoint> grid) {
  std::stable_sort(grid.begin(), grid.end(),
                   [](const SweepPoint& a, const SweepPoint& b) {
                     return a.lambda < b.lambda;
                   });
  SweepResult out;
  auto first_unstable = std::find_if(
      grid.begin(), grid.end(), [](const SweepPoint& p) { return !p.report.stable; });
  if (first_unstable == grid.end()) {
    out.flag = ThresholdFlag::kAllStable;
  } else if (first_unstable == grid.begin()) {
    out.flag = ThresholdFlag::kAllUnstable;
  } else {
    out.flag = ThresholdFlag::kBracketed;
    out.threshold = 0.5 * (std::prev(first_unstable)->lambda + first_unstable->lambda);
  }
  if (first_unstable != grid.end()) {
    out.monotonicity_violated =
        std::any_of(std::next(first_unstable), grid.end(),
                    [](const SweepPoint& p) { return p.report.stable; });
  }
  out.grid = std::move(grid);
  return out;
}

std::vector<double> lambda_grid(double lo, double hi, int points) {
  if (!(lo < hi) || points < 2) {
    throw std::invalid_argument("lambda grid needs lo < hi and at least 2 points");
  }
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g.push_back(lo + (hi - lo) * i / (points - 1));
  }
  return g;
}

namespace {

std::string rational(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "experiment,variant,C,N,lambda,seed,slots,warmup,admitted,delivered,"
         "mean_delay,mean_Q,mean_U,mean_D,transmissions,"
         "duplicate_transmissions,growth_slope,stable";
}

std::string csv_row(const RunRecord& r) {
  const SimConfig& c = r.cfg;
  const MetricsReport& m = r.report;
  std::string row;
  row += r.experiment;
  row += ',';
  row += to_string(c.variant);
  row += ',' + std::to_string(c.cells);
  row += ',' + std::to_string(c.nodes);
  row += ',' + rational(c.lambda);
  row += ',' + std::to_string(c.seed);
  row += ',' + std::to_string(c.slots);
  row += ',' + std::to_string(c.warmup);
  row += ',' + std::to_string(m.admitted);
  row += ',' + std::to_string(m.delivered);
  row += ',' + (m.mean_delay ? rational(*m.mean_delay) : std::string("NA"));
  row += ',' + rational(m.mean_q);
  row += ',' + rational(m.mean_u);
  row += ',' + rational(m.mean_d);
  row += ',' + std::to_string(m.transmissions);
  row += ',' + std::to_string(m.duplicate_transmissions);
  row += ',' + rational(m.growth_slope);
  row += m.stable ? ",true" : ",false";
  return row;
}

std::string format_csv(std::span<const RunRecord> rows) {
  std::string out = csv_header() + '\n';
  for (const RunRecord& r : rows) out += csv_row(r) + '\n';
  return out;
}

void write_csv(std::span<const RunRecord> rows,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing: " +
                             std::strerror(errno));
  }
  out << format_csv(rows);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace bwar

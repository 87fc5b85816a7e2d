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

#ifndef BWAR_EXPERIMENT_HPP
#define BWAR_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwar/core.hpp"
#include "bwar/metrics.hpp"

namespace bwar {

enum class ExperimentPreset { kFig1a, kFig1b, kFig3, kFig4, kFig5, kCustom };

std::string_view to_string(ExperimentPreset p);
std::optional<ExperimentPreset> parse_preset(std::string_view name);

/// Arrival-rate grid of the load sweeps (fig1b, fig3, fig4).
std::span<const double> load_sweep_lambdas();
/// Arrival rates of the timeout study (fig5).
std::span<const double> timeout_study_lambdas();
/// Timeout values of the timeout study, in multiples of the cell count.
std::span<const int> timeout_study_multiples();

struct Job {
  std::string experiment;
  SimConfig cfg;
};

struct PresetOptions {
  Slot slots = 100000;
  std::uint64_t seed = 1;
  int seeds = 1;
  Slot warmup = 0;
};

/// Deterministic expansion: grid order first, then seeds seed..seed+K-1.
/// kCustom expands `custom` over the seeds.
std::vector<Job> expand_preset(ExperimentPreset preset, const PresetOptions& opt,
                               const SimConfig& custom = {});

std::vector<RunRecord> run_jobs(std::span<const Job> jobs, int workers = 0);

/// Command-line entry point. Returns the process exit status:
/// 0 success, 1 I/O failure, 2 usage or configuration error.
int parse_and_run(std::span<const std::string> args, std::ostream& out,
                  std::ostream& err);

}  // namespace bwar

#endif  // BWAR_EXPERIMENT_HPP

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

#include "bwar/experiment.hpp"

#include <array>

#include "bwar/engine.hpp"

namespace bwar {

namespace {

constexpr std::array kLoadLambdas{0.001, 0.004, 0.016, 0.032, 0.048,
                                  0.064, 0.080, 0.096, 0.112, 0.128};
constexpr std::array kTimeoutLambdas{0.001, 0.016, 0.064, 0.128};
constexpr std::array kTimeoutMultiples{1, 2, 4, 8};
constexpr std::array kSizes{9, 12, 16, 20, 25};

SimConfig base(int cells, double lambda, Variant v, const PresetOptions& opt) {
  SimConfig cfg;
  cfg.cells = cells;
  cfg.nodes = recommended_nodes(cells);
  cfg.lambda = lambda;
  cfg.variant = v;
  cfg.slots = opt.slots;
  cfg.warmup = opt.warmup;
  return cfg;
}

void add_seeds(std::vector<Job>& jobs, std::string_view name, SimConfig cfg,
               const PresetOptions& opt) {
  for (int k = 0; k < opt.seeds; ++k) {
    cfg.seed = opt.seed + static_cast<std::uint64_t>(k);
    jobs.push_back(Job{std::string(name), cfg});
  }
}

}  // namespace

std::string_view to_string(ExperimentPreset p) {
  switch (p) {
    case ExperimentPreset::kFig1a: return "fig1a";
    case ExperimentPreset::kFig1b: return "fig1b";
    case ExperimentPreset::kFig3: return "fig3";
    case ExperimentPreset::kFig4: return "fig4";
    case ExperimentPreset::kFig5: return "fig5";
    case ExperimentPreset::kCustom: return "custom";
  }
  return "?";
}

std::optional<ExperimentPreset> parse_preset(std::string_view name) {
  for (auto p : {ExperimentPreset::kFig1a, ExperimentPreset::kFig1b,
                 ExperimentPreset::kFig3, ExperimentPreset::kFig4,
                 ExperimentPreset::kFig5, ExperimentPreset::kCustom}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::span<const double> load_sweep_lambdas() { return kLoadLambdas; }
std::span<const double> timeout_study_lambdas() { return kTimeoutLambdas; }
std::span<const int> timeout_study_multiples() { return kTimeoutMultiples; }

std::vector<Job> expand_preset(ExperimentPreset preset, const PresetOptions& opt,
                               const SimConfig& custom) {
  std::vector<Job> jobs;
  const std::string_view name = to_string(preset);
  switch (preset) {
    case ExperimentPreset::kFig1a:
      for (int cells : kSizes) {
        for (Variant v : kAllVariants) {
          add_seeds(jobs, name, base(cells, 0.001, v, opt), opt);
        }
      }
      break;
    case ExperimentPreset::kFig1b:
      for (double lambda : kLoadLambdas) {
        for (Variant v : {Variant::kRb, Variant::kRbDa, Variant::kBwarIm,
                          Variant::kBwarId, Variant::kBwarTd}) {
          add_seeds(jobs, name, base(25, lambda, v, opt), opt);
        }
      }
      break;
    case ExperimentPreset::kFig3:
      for (double lambda : kLoadLambdas) {
        for (Variant v : {Variant::kBwarId, Variant::kBwarTd, Variant::kSnw}) {
          add_seeds(jobs, name, base(25, lambda, v, opt), opt);
        }
      }
      break;
    case ExperimentPreset::kFig4:
      for (double lambda : kLoadLambdas) {
        for (Variant v : kAllVariants) {
          add_seeds(jobs, name, base(25, lambda, v, opt), opt);
        }
      }
      break;
    case ExperimentPreset::kFig5:
      for (double lambda : kTimeoutLambdas) {
        add_seeds(jobs, name, base(25, lambda, Variant::kBwarId, opt), opt);
        for (int mult : kTimeoutMultiples) {
          SimConfig cfg = base(25, lambda, Variant::kBwarTd, opt);
          cfg.timeout = mult * cfg.cells;
          add_seeds(jobs, name, cfg, opt);
        }
      }
      break;
    case ExperimentPreset::kCustom:
      add_seeds(jobs, name, custom, opt);
      break;
  }
  for (Job& j : jobs) j.cfg = validate_config(j.cfg);
  return jobs;
}

std::vector<RunRecord> run_jobs(std::span<const Job> jobs, int workers) {
  std::vector<SimConfig> configs;
  configs.reserve(jobs.size());
  for (const Job& j : jobs) configs.push_back(j.cfg);
  std::vector<MetricsReport> reports = run_batch(configs, workers);
  std::vector<RunRecord> out;
  out.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.push_back(RunRecord{jobs[i].experiment, jobs[i].cfg, reports[i]});
  }
  return out;
}

}  // namespace bwar

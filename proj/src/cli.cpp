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

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "bwar/experiment.hpp"

namespace bwar {

namespace {

constexpr int kUsageError = 2;
constexpr int kIoError = 1;

}  // namespace

int parse_and_run(std::span<const std::string> args, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"Discrete-time backpressure routing simulator"};
  app.name(args.empty() ? "bwar_sim" : args.front());

  std::string preset_name = "custom";
  std::string variant_name;
  int cells = 25;
  std::optional<int> nodes;
  double lambda = 0.001;
  Slot slots = 100000;
  Slot warmup = 0;
  std::uint64_t seed = 1;
  int seeds = 1;
  std::optional<int> timeout;
  std::optional<int> snw_copies;
  int q_th = 1;
  int d_max = 1;
  bool random_ties = false;
  bool audit = false;
  int workers = 0;
  std::string out_path;

  app.add_option("--preset", preset_name,
                 "fig1a, fig1b, fig3, fig4, fig5 or custom");
  app.add_option("--variant", variant_name,
                 "RB, RB-DA, BWAR-IM, BWAR-ID, BWAR-TD or SNW (custom only)");
  app.add_option("--cells", cells, "number of cells C");
  app.add_option("--nodes", nodes, "number of nodes N (default ~1.79C, even)");
  app.add_option("--lambda", lambda, "per-node arrival probability per slot");
  app.add_option("--slots", slots, "slots per run");
  app.add_option("--warmup", warmup, "slots excluded from averages");
  app.add_option("--seed", seed, "first seed");
  app.add_option("--seeds", seeds, "number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  app.add_option("--timeout", timeout, "BWAR-TD duplicate lifetime (default C)");
  app.add_option("--snw-copies", snw_copies, "Spray and Wait copy budget L");
  app.add_option("--q-th", q_th, "duplication queue threshold");
  app.add_option("--d-max", d_max, "duplicate buffer capacity");
  app.add_flag("--random-ties", random_ties, "break scheduling ties at random");
  app.add_flag("--audit", audit, "check invariants every slot (slow)");
  app.add_option("--workers", workers, "parallel runs (default: all cores)");
  app.add_option("--out", out_path, "CSV output path (default stdout)");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1),
                                     args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  auto preset = parse_preset(preset_name);
  if (!preset) {
    err << "unknown preset '" << preset_name << "'\n";
    return kUsageError;
  }

  SimConfig custom;
  if (*preset == ExperimentPreset::kCustom) {
    if (variant_name.empty()) {
      err << "--variant is required without --preset\n";
      return kUsageError;
    }
    auto v = parse_variant(variant_name);
    if (!v) {
      err << "unknown variant '" << variant_name << "'\n";
      return kUsageError;
    }
    custom.variant = *v;
    custom.cells = cells;
    custom.nodes = nodes ? *nodes : recommended_nodes(cells);
    custom.lambda = lambda;
    custom.timeout = timeout;
    custom.snw_copies = snw_copies;
    custom.q_th = q_th;
    custom.d_max = d_max;
    custom.slots = slots;
    custom.warmup = warmup;
    custom.random_tie_break = random_ties;
    custom.audit = audit;
  } else if (!variant_name.empty()) {
    err << "--variant only applies to custom runs\n";
    return kUsageError;
  }

  PresetOptions opt;
  opt.slots = slots;
  opt.seed = seed;
  opt.seeds = seeds;
  opt.warmup = warmup;

  std::vector<Job> jobs;
  try {
    jobs = expand_preset(*preset, opt, custom);
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kUsageError;
  }

  const std::vector<RunRecord> rows = run_jobs(jobs, workers);
  if (out_path.empty()) {
    out << format_csv(rows);
    return out ? 0 : kIoError;
  }
  try {
    write_csv(rows, out_path);
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kIoError;
  }
  return 0;
}

}  // namespace bwar

// Copyright 2026 The sortbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sortbench: run online-sorting experiments from the command line.
//
//   sortbench run --n 1000 --epsilon 1 --strategy sorter --workload uniform
//   sortbench sweep --config grid.json
//   sortbench oracle --max-n 6
//
// Exit codes: 0 success, 1 a row failed or an audit found violations,
// 2 bad arguments or configuration, 3 I/O failure.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sortbench/emit.hpp"
#include "sortbench/error.hpp"
#include "sortbench/experiment.hpp"
#include "sortbench/metrics.hpp"

namespace {

constexpr int kExitRowFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int exit_code_for(const sortbench::Error& e) {
  return e.code() == sortbench::ErrorCode::kIo ? kExitIo : kExitConfig;
}

int finish(const std::vector<sortbench::ExperimentRow>& rows,
           sortbench::OutputFormat format, const std::string& path) {
  sortbench::emit(rows, format, path);
  int status = 0;
  for (const auto& row : rows) {
    if (!row.audit_pass) {
      std::cerr << "sortbench: " << row.strategy << '/' << row.workload
                << " n=" << row.n << " eps=" << row.epsilon
                << " seed=" << row.seed << ": " << row.error << '\n';
      status = kExitRowFailure;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online sorting benchmark harness"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a single experiment");
  std::size_t n = 0;
  double epsilon = 1.0;
  std::string strategy_name;
  std::string workload_name;
  std::uint64_t seed = 0;
  bool audit = false;
  bool timing = false;
  std::string format_name = "csv";
  std::string out_path;
  double gap = sortbench::WorkloadSpec{}.gap;
  double flood_width = sortbench::WorkloadSpec{}.flood_width;
  run_cmd->add_option("--n", n, "Number of input values")->required();
  run_cmd->add_option("--epsilon", epsilon, "Slack fraction in (0, 3]")
      ->required();
  run_cmd->add_option("--strategy", strategy_name,
                      "sorter | baseline | naive_sequential | random_cell")
      ->required();
  run_cmd->add_option("--workload", workload_name,
                      "uniform | sorted_asc | sorted_desc | two_cluster | "
                      "interval_flood | sawtooth | midpoint_adversary")
      ->required();
  run_cmd->add_option("--seed", seed, "Workload / strategy seed");
  run_cmd->add_flag("--audit", audit, "Check the recursion invariants");
  run_cmd->add_flag("--timing", timing, "Record placement wall time");
  run_cmd->add_option("--format", format_name, "csv | json");
  run_cmd->add_option("--out", out_path, "Output file (default stdout)");
  run_cmd->add_option("--gap", gap, "two_cluster gap width");
  run_cmd->add_option("--flood-width", flood_width,
                      "interval_flood window width");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a JSON-configured grid");
  std::string config_path;
  sweep_cmd->add_option("--config", config_path, "Sweep config (JSON)")
      ->required();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force vs closed-form optimum check");
  std::size_t max_n = 6;
  std::size_t max_cells = 9;
  std::size_t trials = 500;
  std::uint64_t oracle_seed = 1;
  oracle_cmd->add_option("--max-n", max_n, "Largest multiset size (<= 8)");
  oracle_cmd->add_option("--max-cells", max_cells, "Largest array (<= 10)");
  oracle_cmd->add_option("--trials", trials, "Random multisets to test");
  oracle_cmd->add_option("--seed", oracle_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) {
      sortbench::ExperimentConfig config;
      config.strategies = {sortbench::parse_strategy_kind(strategy_name)};
      sortbench::WorkloadSpec workload;
      workload.kind = sortbench::parse_workload_kind(workload_name);
      workload.gap = gap;
      workload.flood_width = flood_width;
      config.workloads = {workload};
      config.ns = {n};
      config.epsilons = {epsilon};
      config.seeds = {seed};
      config.audit = audit;
      config.timing = timing;
      config.format = sortbench::parse_output_format(format_name);
      config.output_path = out_path;
      const auto rows = sortbench::run_experiment(config, 1);
      return finish(rows, config.format, config.output_path);
    }
    if (*sweep_cmd) {
      const auto config = sortbench::load_config(config_path);
      const auto rows =
          sortbench::run_experiment(config, sortbench::thread_budget());
      return finish(rows, config.format, config.output_path);
    }
    if (*oracle_cmd) {
      max_cells = std::max(max_cells, max_n);
      const auto summary =
          sortbench::run_oracle_suite(max_n, max_cells, trials, oracle_seed);
      std::cout << "oracle: " << summary.trials << " multisets (size <= "
                << max_n << ", N <= " << max_cells << "), "
                << summary.mismatches << " mismatches\n";
      return summary.mismatches == 0 ? 0 : kExitRowFailure;
    }
  } catch (const sortbench::Error& e) {
    std::cerr << "sortbench: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}

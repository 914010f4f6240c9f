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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sortbench/strategy.hpp"
#include "sortbench/workloads.hpp"

namespace sortbench {

enum class OutputFormat { kCsv, kJson };

std::string_view to_string(OutputFormat format);
/// Throws kInvalidConfig for anything but "csv" or "json".
OutputFormat parse_output_format(std::string_view name);

/// A sweep over strategies x workloads x ns x epsilons x seeds, in that
/// nesting order (seeds innermost). The workload's own n and seed are
/// replaced by the grid values.
struct ExperimentConfig {
  std::vector<StrategyKind> strategies;
  std::vector<WorkloadSpec> workloads;
  std::vector<std::size_t> ns;
  std::vector<double> epsilons;
  std::vector<std::uint64_t> seeds;
  bool audit = false;
  /// Wall-clock timing of the placement loop. Off by default so that
  /// repeated sweeps produce identical files; runtime_ms is 0 when off.
  bool timing = false;
  OutputFormat format = OutputFormat::kCsv;
  std::string output_path;  // empty: stdout
};

/// Parses the JSON sweep document:
///   {"strategies": ["sorter", ...],
///    "workloads": [{"name": "uniform"}, {"name": "two_cluster", "gap": 0.2}],
///    "ns": [1000], "epsilons": [1.0], "seeds": [42],
///    "audit": true, "timing": false,
///    "output": {"format": "csv", "path": "out.csv"}}
/// Throws kInvalidConfig (malformed document, empty grid axis, n < 2),
/// kInvalidEpsilon (epsilon outside (0, 3]) or kInvalidSpec (unknown names).
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);

/// Checks the grid; same errors as parse_config.
void validate_config(const ExperimentConfig& config);

struct ExperimentRow {
  std::string strategy;
  std::string workload;
  std::size_t n = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::size_t array_size = 0;
  double cost = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  double runtime_ms = 0.0;
  int k = 0;
  double delta = 0.0;
  int max_recursion_depth = 0;
  bool audit_pass = false;
  /// Failure description; not part of the emitted schema.
  std::string error;
};

struct GridPoint {
  StrategyKind strategy;
  WorkloadSpec workload;  // n and seed already set
  double epsilon;
  bool audit;
  bool timing;
};

/// Runs one grid point. Placement failures and audit violations are
/// reported in the row (audit_pass = false, error set), never thrown.
ExperimentRow run_point(const GridPoint& point);

/// Expands the grid in deterministic order.
std::vector<GridPoint> expand_grid(const ExperimentConfig& config);

/// Runs every grid point on up to `threads` workers; rows come back in grid
/// order regardless of completion order.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          unsigned threads);

/// Worker count: hardware concurrency, capped by SORTBENCH_THREADS if set.
unsigned thread_budget();

}  // namespace sortbench

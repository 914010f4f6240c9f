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

#include "sortbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sortbench/audit.hpp"
#include "sortbench/error.hpp"
#include "sortbench/metrics.hpp"
#include "sortbench/omega_params.hpp"
#include "sortbench/run.hpp"

namespace sortbench {
namespace {

using nlohmann::json;

template <typename T>
std::vector<T> required_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("'") + key + "' must be an array");
  }
  return doc.at(key).get<std::vector<T>>();
}

WorkloadSpec parse_workload(const json& entry) {
  WorkloadSpec spec;
  if (entry.is_string()) {
    spec.kind = parse_workload_kind(entry.get<std::string>());
    return spec;
  }
  if (!entry.is_object() || !entry.contains("name")) {
    throw Error(ErrorCode::kInvalidConfig,
                "workload entries need a 'name' field");
  }
  spec.kind = parse_workload_kind(entry.at("name").get<std::string>());
  spec.gap = entry.value("gap", spec.gap);
  spec.flood_width = entry.value("flood_width", spec.flood_width);
  return spec;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown output format '" + std::string(name) + "'");
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");
  }

  ExperimentConfig config;
  try {
    for (const auto& name : required_array<std::string>(doc, "strategies")) {
      config.strategies.push_back(parse_strategy_kind(name));
    }
    if (!doc.contains("workloads") || !doc.at("workloads").is_array()) {
      throw Error(ErrorCode::kInvalidConfig, "'workloads' must be an array");
    }
    for (const auto& entry : doc.at("workloads")) {
      config.workloads.push_back(parse_workload(entry));
    }
    config.ns = required_array<std::size_t>(doc, "ns");
    config.epsilons = required_array<double>(doc, "epsilons");
    config.seeds = required_array<std::uint64_t>(doc, "seeds");
    config.audit = doc.value("audit", false);
    config.timing = doc.value("timing", false);
    if (doc.contains("output")) {
      const json& out = doc.at("output");
      config.format = parse_output_format(out.value("format", "csv"));
      config.output_path = out.value("path", "");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  validate_config(config);
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate_config(const ExperimentConfig& config) {
  if (config.strategies.empty() || config.workloads.empty() ||
      config.ns.empty() || config.epsilons.empty() || config.seeds.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "every grid axis must be nonempty");
  }
  for (std::size_t n : config.ns) {
    if (n < 2) throw Error(ErrorCode::kInvalidConfig, "n must be >= 2");
  }
  for (double eps : config.epsilons) {
    if (!(eps > 0.0 && eps <= 3.0)) {
      throw Error(ErrorCode::kInvalidEpsilon,
                  "epsilon " + std::to_string(eps) + " outside (0, 3]");
    }
  }
}

std::vector<GridPoint> expand_grid(const ExperimentConfig& config) {
  std::vector<GridPoint> grid;
  for (StrategyKind strategy : config.strategies) {
    for (const WorkloadSpec& workload : config.workloads) {
      for (std::size_t n : config.ns) {
        for (double eps : config.epsilons) {
          for (std::uint64_t seed : config.seeds) {
            WorkloadSpec spec = workload;
            spec.n = n;
            spec.seed = seed;
            grid.push_back({strategy, spec, eps, config.audit, config.timing});
          }
        }
      }
    }
  }
  return grid;
}

ExperimentRow run_point(const GridPoint& point) {
  ExperimentRow row;
  row.strategy = std::string(to_string(point.strategy));
  row.workload = std::string(to_string(point.workload.kind));
  row.n = point.workload.n;
  row.epsilon = point.epsilon;
  row.seed = point.workload.seed;

  std::unique_ptr<Strategy> strategy;
  try {
    const TopLevelConfig top = derive_top(row.n, row.epsilon);
    row.array_size = top.N;
    row.k = top.k;
    row.delta = top.delta;

    const StrategySpec spec{point.strategy, row.seed, point.audit};
    strategy = new_strategy(spec, top.k, top.delta, row.n, top.N,
                            Interval{0.0, kUnitSpan});
    auto source = generate(point.workload);

    double place_ms = 0.0;
    RunResult result =
        run(*strategy, *source, row.n, point.timing ? &place_ms : nullptr);
    row.runtime_ms = place_ms;
    row.max_recursion_depth = strategy->recursion_depth();

    const CostReport report = evaluate(result.array);
    row.cost = report.cost;
    row.opt = report.opt;
    row.ratio = report.ratio;
    row.audit_pass = true;

    if (point.audit) {
      const std::vector<NodeSnapshot> tree = snapshot_tree(*strategy);
      const AuditReport audit_report = audit(result.trace, top, tree);
      row.audit_pass = audit_report.pass;
      if (!audit_report.pass) {
        const Violation& v = audit_report.violations.front();
        row.error = "audit: " + v.invariant + " at " + v.node + " step " +
                    std::to_string(v.step) + ": " + v.detail + " (" +
                    std::to_string(audit_report.violations.size()) +
                    " violations)";
      }
    }
  } catch (const std::exception& e) {
    row.audit_pass = false;
    row.error = e.what();
    if (strategy) {
      const CostReport report = evaluate(strategy->array());
      row.cost = report.cost;
      row.opt = report.opt;
      row.ratio = report.ratio;
      row.max_recursion_depth = strategy->recursion_depth();
    }
  }
  return row;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          unsigned threads) {
  validate_config(config);
  const std::vector<GridPoint> grid = expand_grid(config);
  std::vector<ExperimentRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      rows[i] = run_point(grid[i]);
    }
  };
  const unsigned count =
      std::clamp<unsigned>(threads, 1, static_cast<unsigned>(
                                           std::max<std::size_t>(1, grid.size())));
  if (count == 1) {
    worker();
    return rows;
  }
  std::vector<std::jthread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return rows;
}

unsigned thread_budget() {
  unsigned budget = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SORTBENCH_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) {
      budget = std::min(budget, static_cast<unsigned>(cap));
    }
  }
  return budget;
}

}  // namespace sortbench

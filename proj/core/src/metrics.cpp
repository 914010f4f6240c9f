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

#include "sortbench/metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "sortbench/error.hpp"
#include "sortbench/exact_sum.hpp"
#include "sortbench/rng.hpp"

namespace sortbench {

double cost(std::span<const std::optional<double>> cells) {
  ExactSum sum;
  const std::optional<double>* prev = nullptr;
  for (const auto& cell : cells) {
    if (!cell) continue;
    if (prev) sum.add_distance(**prev, *cell);
    prev = &cell;
  }
  return sum.value();
}

double cost(const ArrayState& array) { return cost(array.cells()); }

double opt_cost(std::span<const double> values) {
  if (values.size() <= 1) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

double competitive_ratio(double cost, double opt) {
  if (opt == 0.0) {
    return cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return cost / opt;
}

CostReport evaluate(const ArrayState& array) {
  CostReport report;
  report.cost = cost(array);
  const std::vector<double> values = array.values();
  report.opt = opt_cost(values);
  report.ratio = competitive_ratio(report.cost, report.opt);
  report.occupied = array.occupied();
  report.N = array.size();
  return report;
}

namespace {

void enumerate(std::span<const double> values, std::size_t next,
               std::vector<std::optional<double>>& cells, double& best) {
  if (next == values.size()) {
    best = std::min(best, cost(cells));
    return;
  }
  for (auto& cell : cells) {
    if (cell) continue;
    cell = values[next];
    enumerate(values, next + 1, cells, best);
    cell.reset();
  }
}

}  // namespace

double brute_force_opt(std::span<const double> values, std::size_t N) {
  if (values.size() > kBruteForceMaxValues || N > kBruteForceMaxCells) {
    throw Error(ErrorCode::kTooLarge,
                "brute force limited to 8 values in 10 cells, got " +
                    std::to_string(values.size()) + " in " + std::to_string(N));
  }
  if (N < values.size()) {
    throw Error(ErrorCode::kInvalidParams, "fewer cells than values");
  }
  std::vector<std::optional<double>> cells(N);
  double best = std::numeric_limits<double>::infinity();
  enumerate(values, 0, cells, best);
  return best;
}

OracleSummary run_oracle_suite(std::size_t max_n, std::size_t max_cells,
                               std::size_t trials, std::uint64_t seed) {
  if (max_n > kBruteForceMaxValues || max_cells > kBruteForceMaxCells ||
      max_cells < max_n) {
    throw Error(ErrorCode::kTooLarge, "oracle suite size out of range");
  }
  Rng rng(seed);
  OracleSummary summary;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto size = static_cast<std::size_t>(rng.below(max_n + 1));
    const std::size_t N = size + static_cast<std::size_t>(
                                     rng.below(max_cells - size + 1));
    std::vector<double> values(size);
    for (double& v : values) {
      // Mostly grid points (duplicates likely), sometimes jittered off-grid.
      v = static_cast<double>(rng.below(17)) / 16.0;
      const double jitter = rng.uniform() * 1e-3;
      if (rng.below(2) == 1) v += jitter;
    }
    ++summary.trials;
    if (brute_force_opt(values, N) != opt_cost(values)) ++summary.mismatches;
  }
  return summary;
}

}  // namespace sortbench

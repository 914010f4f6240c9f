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
#include <optional>
#include <span>

#include "sortbench/array_state.hpp"

namespace sortbench {

/// Sum of |A[i_k] - A[i_{k+1}]| over consecutive occupied cells, 0 for fewer
/// than two values. The sum is correctly rounded, so it is reproducible and
/// a sorted arrangement costs exactly max - min.
double cost(std::span<const std::optional<double>> cells);
double cost(const ArrayState& array);

/// Offline optimum: max - min, 0 for at most one value.
double opt_cost(std::span<const double> values);

struct CostReport {
  double cost = 0.0;
  double opt = 0.0;
  /// cost / opt; 1 when both are 0 and +infinity when only opt is 0.
  double ratio = 1.0;
  std::size_t occupied = 0;
  std::size_t N = 0;
};

double competitive_ratio(double cost, double opt);
CostReport evaluate(const ArrayState& array);

inline constexpr std::size_t kBruteForceMaxValues = 8;
inline constexpr std::size_t kBruteForceMaxCells = 10;

/// Minimum cost over every injective placement of `values` into N cells.
/// Throws kTooLarge beyond 8 values or 10 cells, kInvalidParams if N is
/// smaller than the number of values.
double brute_force_opt(std::span<const double> values, std::size_t N);

struct OracleSummary {
  std::size_t trials = 0;
  std::size_t mismatches = 0;
};

/// Compares brute_force_opt against opt_cost on `trials` random multisets of
/// size 0..max_n (values from a coarse grid so duplicates occur) over
/// N in [size, max_cells].
OracleSummary run_oracle_suite(std::size_t max_n, std::size_t max_cells,
                               std::size_t trials, std::uint64_t seed);

}  // namespace sortbench

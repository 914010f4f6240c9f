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
#include <span>
#include <string>
#include <vector>

#include "sortbench/omega_params.hpp"
#include "sortbench/run.hpp"
#include "sortbench/strategy.hpp"

namespace sortbench {

struct Violation {
  std::string invariant;
  std::string node;  // "trace", "top", or a sorter node path
  std::size_t step = 0;
  std::string detail;
};

struct LevelStats {
  std::string node;
  int depth = 0;
  int k = 0;
  std::size_t ell = 0;
  std::size_t b = 0;
  std::size_t n_prime = 0;
  std::size_t w = 0;
  std::size_t s_count = 0;
  std::size_t max_box_count = 0;
};

struct AuditReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<LevelStats> per_level;
};

/// Replays a run against the recursion's correctness conditions.
///
/// Trace level: single occupancy, cells inside [0, N), at most n values.
/// Per sorter node (from its placement records):
///   - every value lies in the subinterval it was routed by, and every value
///     in a box shares the subinterval the box was assigned to;
///   - a box is handed out by the box sorter at most once;
///   - values reuse the pointed-to box exactly while it is not full;
///   - no box ever holds more than n' values;
///   - s_count * (1 + 2^(k-3) delta) <= ell after every routed value;
///   - ell <= (1 + 2^k delta) / (2^(k-5) delta) * b and
///     s_count <= (2^(7-2k) delta^-2 + 2^(7-k) delta^-1) n^(w_{k-4}/w_k).
/// Violations are reported, never thrown.
AuditReport audit(const PlacementTrace& trace, const TopLevelConfig& top,
                  std::span<const NodeSnapshot> tree);

}  // namespace sortbench

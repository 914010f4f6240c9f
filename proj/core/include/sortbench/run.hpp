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
#include <vector>

#include "sortbench/array_state.hpp"
#include "sortbench/strategy.hpp"

namespace sortbench {

struct Placement {
  std::size_t step = 0;
  double value = 0.0;
  std::size_t cell = 0;
};

using PlacementTrace = std::vector<Placement>;

struct RunResult {
  ArrayState array;
  PlacementTrace trace;
};

/// Supplies the next input value. Adaptive sources look at the array before
/// choosing and are told where each value landed.
class ValueSource {
 public:
  virtual ~ValueSource() = default;

  virtual double next(const ArrayState& array) = 0;
  virtual void observe(std::size_t /*cell*/, double /*value*/) {}
  virtual bool adaptive() const { return false; }
};

/// Feeds `stream` to the strategy one value at a time. Strategy errors are
/// rethrown with the failing step attached.
RunResult run(Strategy& strategy, std::span<const double> stream);

/// Draws `count` values from `source`, each after the previous was placed.
/// If `place_ms` is given it receives the wall time spent inside place().
RunResult run(Strategy& strategy, ValueSource& source, std::size_t count,
              double* place_ms = nullptr);

}  // namespace sortbench

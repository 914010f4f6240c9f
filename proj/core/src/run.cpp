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

#include "sortbench/run.hpp"

#include <chrono>

#include "sortbench/error.hpp"

namespace sortbench {
namespace {

std::size_t place_at_step(Strategy& strategy, double value, std::size_t step) {
  try {
    return strategy.place(value);
  } catch (const Error& e) {
    if (e.step()) throw;
    throw Error(e.code(), e.detail(), step);
  }
}

}  // namespace

RunResult run(Strategy& strategy, std::span<const double> stream) {
  PlacementTrace trace;
  trace.reserve(stream.size());
  for (std::size_t step = 0; step < stream.size(); ++step) {
    const double value = stream[step];
    trace.push_back({step, value, place_at_step(strategy, value, step)});
  }
  return {strategy.array(), std::move(trace)};
}

RunResult run(Strategy& strategy, ValueSource& source, std::size_t count,
              double* place_ms) {
  using Clock = std::chrono::steady_clock;
  PlacementTrace trace;
  trace.reserve(count);
  Clock::duration spent{};
  for (std::size_t step = 0; step < count; ++step) {
    const double value = source.next(strategy.array());
    std::size_t cell = 0;
    if (place_ms) {
      const auto start = Clock::now();
      cell = place_at_step(strategy, value, step);
      spent += Clock::now() - start;
    } else {
      cell = place_at_step(strategy, value, step);
    }
    source.observe(cell, value);
    trace.push_back({step, value, cell});
  }
  if (place_ms) {
    *place_ms = std::chrono::duration<double, std::milli>(spent).count();
  }
  return {strategy.array(), std::move(trace)};
}

}  // namespace sortbench

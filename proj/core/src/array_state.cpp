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

#include "sortbench/array_state.hpp"

#include <string>

#include "sortbench/error.hpp"

namespace sortbench {

ArrayState::ArrayState(std::size_t size) : cells_(size) {}

void ArrayState::put(std::size_t cell, double value) {
  if (cell >= cells_.size()) {
    throw Error(ErrorCode::kCapacityExceeded,
                "cell " + std::to_string(cell) + " outside array of size " +
                    std::to_string(cells_.size()));
  }
  if (cells_[cell].has_value()) {
    throw Error(ErrorCode::kCapacityExceeded,
                "cell " + std::to_string(cell) + " is already occupied");
  }
  cells_[cell] = value;
  ++occupied_;
}

std::vector<double> ArrayState::values() const {
  std::vector<double> out;
  out.reserve(occupied_);
  for (const auto& cell : cells_) {
    if (cell) out.push_back(*cell);
  }
  return out;
}

}  // namespace sortbench

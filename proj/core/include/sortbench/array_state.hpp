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
#include <optional>
#include <span>
#include <vector>

namespace sortbench {

/// The target array. Cells go from empty to holding a value at most once and
/// are never cleared.
class ArrayState {
 public:
  ArrayState() = default;
  explicit ArrayState(std::size_t size);

  std::size_t size() const noexcept { return cells_.size(); }
  std::size_t occupied() const noexcept { return occupied_; }
  bool is_empty(std::size_t cell) const { return !cells_.at(cell).has_value(); }

  const std::optional<double>& operator[](std::size_t cell) const {
    return cells_[cell];
  }
  std::span<const std::optional<double>> cells() const noexcept {
    return cells_;
  }

  /// Writes `value` into an empty cell. Throws kCapacityExceeded if the cell
  /// is out of range or already holds a value.
  void put(std::size_t cell, double value);

  /// Occupied values in index order.
  std::vector<double> values() const;

 private:
  std::vector<std::optional<double>> cells_;
  std::size_t occupied_ = 0;
};

}  // namespace sortbench

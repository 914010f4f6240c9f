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

#include "sortbench/comparators.hpp"

#include <numeric>

namespace sortbench {

RandomCellStrategy::RandomCellStrategy(std::size_t n_cap, std::size_t N,
                                       Interval interval, std::uint64_t seed)
    : Strategy(n_cap, N, interval), rng_(seed, kStrategyStream), empty_(N) {
  std::iota(empty_.begin(), empty_.end(), std::size_t{0});
}

std::size_t RandomCellStrategy::choose_cell(double) {
  const auto pick = static_cast<std::size_t>(rng_.below(empty_.size()));
  const std::size_t cell = empty_[pick];
  empty_[pick] = empty_.back();
  empty_.pop_back();
  return cell;
}

}  // namespace sortbench

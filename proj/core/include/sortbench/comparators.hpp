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
#include <vector>

#include "sortbench/rng.hpp"
#include "sortbench/strategy.hpp"

namespace sortbench {

/// Always the leftmost empty cell.
class NaiveSequentialStrategy final : public Strategy {
 public:
  NaiveSequentialStrategy(std::size_t n_cap, std::size_t N, Interval interval)
      : Strategy(n_cap, N, interval) {}

  std::string_view name() const override { return "naive_sequential"; }

 protected:
  std::size_t choose_cell(double) override { return placed(); }
};

/// A uniformly random empty cell.
class RandomCellStrategy final : public Strategy {
 public:
  RandomCellStrategy(std::size_t n_cap, std::size_t N, Interval interval,
                     std::uint64_t seed);

  std::string_view name() const override { return "random_cell"; }

 protected:
  std::size_t choose_cell(double x) override;

 private:
  Rng rng_;
  std::vector<std::size_t> empty_;
};

}  // namespace sortbench

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
#include <vector>

#include "sortbench/strategy.hpp"

namespace sortbench {

/// Lazy block first-fit with global fallback.
///
/// The interval is cut into m = ceil(sqrt(n_cap)) equal subintervals and the
/// array into blocks of ceil(N / m) cells. A value goes to the leftmost empty
/// cell of its subinterval's open block. When that block is missing or full
/// the next unallocated block (left to right) is opened for the subinterval;
/// once every block is allocated the value takes the leftmost empty cell of
/// the whole array. Placement succeeds while any cell is empty.
///
/// Both rules fill a block from its left end, so each block's occupied cells
/// form a prefix and a fill counter per block is enough.
class BaselineStrategy final : public Strategy {
 public:
  BaselineStrategy(std::size_t n_cap, std::size_t N, Interval interval);

  std::string_view name() const override { return "baseline"; }

  std::size_t subinterval_count() const noexcept { return m_; }
  std::size_t block_size() const noexcept { return block_size_; }

 protected:
  std::size_t choose_cell(double x) override;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t block_length(std::size_t block) const;
  std::size_t take(std::size_t block);

  std::size_t m_;
  std::size_t block_size_;
  std::size_t block_count_;
  std::vector<std::size_t> open_block_;  // per subinterval, kNone if unset
  std::vector<std::size_t> filled_;      // per block
  std::size_t next_unallocated_ = 0;
  std::size_t first_open_ = 0;  // no empty cell in blocks before this one
};

}  // namespace sortbench

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

#include "sortbench/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "sortbench/error.hpp"

namespace sortbench {
namespace {

std::size_t ceil_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

BaselineStrategy::BaselineStrategy(std::size_t n_cap, std::size_t N,
                                   Interval interval)
    : Strategy(n_cap, N, interval) {
  m_ = std::max<std::size_t>(1, ceil_sqrt(n_cap));
  block_size_ = std::max<std::size_t>(1, (N + m_ - 1) / m_);
  block_count_ = (N + block_size_ - 1) / block_size_;
  open_block_.assign(m_, kNone);
  filled_.assign(block_count_, 0);
}

std::size_t BaselineStrategy::block_length(std::size_t block) const {
  return std::min(block_size_, array().size() - block * block_size_);
}

std::size_t BaselineStrategy::take(std::size_t block) {
  return block * block_size_ + filled_[block]++;
}

std::size_t BaselineStrategy::choose_cell(double x) {
  const Interval& iv = interval();
  const double scaled =
      std::floor((x - iv.alpha) / iv.beta * static_cast<double>(m_));
  const auto sub = static_cast<std::size_t>(
      std::clamp(scaled, 0.0, static_cast<double>(m_ - 1)));

  const std::size_t open = open_block_[sub];
  if (open != kNone && filled_[open] < block_length(open)) return take(open);

  if (next_unallocated_ < block_count_) {
    const std::size_t block = next_unallocated_++;
    open_block_[sub] = block;
    return take(block);
  }

  while (first_open_ < block_count_ &&
         filled_[first_open_] == block_length(first_open_)) {
    ++first_open_;
  }
  if (first_open_ == block_count_) {
    throw Error(ErrorCode::kCapacityExceeded, "baseline array is full");
  }
  return take(first_open_);
}

}  // namespace sortbench

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

#include "sortbench/sorter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sortbench/error.hpp"

namespace sortbench {

SorterStrategy::SorterStrategy(const LevelParams& params, bool record)
    : Strategy(params.n_cap, params.N, Interval{params.alpha, params.beta}),
      params_(params),
      record_(record),
      pointer_(params.b, kUnassigned),
      counts_(params.ell, 0),
      in_box_(params.ell) {
  const StrategySpec child{StrategyKind::kSorter, 0, record};
  box_sorter_ = new_strategy(child, params.k - 4, params.delta,
                             params.box_capacity, params.ell,
                             Interval{params.alpha, params.beta});
}

std::size_t SorterStrategy::subinterval_of(double x) const {
  const double scaled = std::floor((x - params_.alpha) / params_.beta *
                                   static_cast<double>(params_.b));
  return static_cast<std::size_t>(
      std::clamp(scaled, 0.0, static_cast<double>(params_.b - 1)));
}

std::size_t SorterStrategy::choose_cell(double x) {
  const std::size_t sub = subinterval_of(x);
  std::size_t box = 0;
  bool routed = false;

  const std::int64_t current = pointer_[sub];
  if (current != kUnassigned &&
      counts_[static_cast<std::size_t>(current)] < params_.n_prime) {
    box = static_cast<std::size_t>(current);
  } else {
    box = box_sorter_->place(x);
    if (box >= params_.ell || in_box_[box] != nullptr) {
      throw Error(ErrorCode::kCapacityExceeded,
                  "box sorter returned unusable box " + std::to_string(box));
    }
    pointer_[sub] = static_cast<std::int64_t>(box);
    ++s_count_;
    routed = true;
    const double width = params_.subinterval_width();
    const StrategySpec child{StrategyKind::kSorter, 0, record_};
    in_box_[box] = new_strategy(
        child, params_.k - 1, params_.delta, params_.n_prime, params_.w,
        Interval{params_.alpha + static_cast<double>(sub) * width, width});
  }

  // Rounding at subinterval edges can leave x an ulp outside the child's
  // interval; the child only routes on the value, so clamp it in.
  Strategy& child = *in_box_[box];
  const Interval& iv = child.interval();
  const double hi = std::nextafter(iv.alpha + iv.beta,
                                   -std::numeric_limits<double>::infinity());
  const std::size_t cell = child.place(std::clamp(x, iv.alpha, hi));
  ++counts_[box];

  if (record_) {
    records_.push_back(NodeRecord{placed(), x, static_cast<std::uint32_t>(sub),
                                  static_cast<std::uint32_t>(box),
                                  static_cast<std::uint32_t>(cell), routed});
  }
  return box * params_.w + cell;
}

int SorterStrategy::recursion_depth() const {
  int deepest = box_sorter_->recursion_depth();
  for (const auto& child : in_box_) {
    if (child) deepest = std::max(deepest, child->recursion_depth());
  }
  return 1 + deepest;
}

void SorterStrategy::collect_nodes(std::vector<NodeSnapshot>& out,
                                   const std::string& path, int depth) const {
  out.push_back(
      NodeSnapshot{path, depth, params_, s_count_, counts_, records_});
  box_sorter_->collect_nodes(out, path + ".box_sorter", depth + 1);
  for (std::size_t j = 0; j < in_box_.size(); ++j) {
    if (in_box_[j]) {
      in_box_[j]->collect_nodes(out, path + ".box[" + std::to_string(j) + "]",
                                depth + 1);
    }
  }
}

}  // namespace sortbench

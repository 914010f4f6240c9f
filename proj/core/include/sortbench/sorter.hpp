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
#include <memory>
#include <span>
#include <vector>

#include "sortbench/omega_params.hpp"
#include "sortbench/strategy.hpp"

namespace sortbench {

/// Sorter_k for k >= 2 over non-degenerate parameters.
///
/// The array is split into ell boxes of w cells and the interval into b
/// equal subintervals. Each subinterval points at (at most) one live box.
/// A value whose subinterval has a non-full box goes there; otherwise it is
/// routed through the box sorter, a Sorter_{k-4} over an ell-cell virtual
/// array whose cell index names a fresh box, and the subinterval is
/// repointed. Inside the box a Sorter_{k-1} picks the cell.
///
/// Box j covers cells [j * w, (j + 1) * w); cells past ell * w stay empty.
class SorterStrategy final : public Strategy {
 public:
  static constexpr std::int64_t kUnassigned = -1;

  SorterStrategy(const LevelParams& params, bool record);

  std::string_view name() const override { return "sorter"; }
  int recursion_depth() const override;
  void collect_nodes(std::vector<NodeSnapshot>& out, const std::string& path,
                     int depth) const override;

  const LevelParams& params() const noexcept { return params_; }
  std::span<const std::int64_t> pointer() const noexcept { return pointer_; }
  std::span<const std::size_t> counts() const noexcept { return counts_; }
  /// Number of values routed through the box sorter so far.
  std::size_t s_count() const noexcept { return s_count_; }
  const Strategy& box_sorter() const noexcept { return *box_sorter_; }
  /// The in-box child of box j, or nullptr if the box was never assigned.
  const Strategy* in_box(std::size_t j) const { return in_box_.at(j).get(); }

  /// 0-based subinterval of x, clamped to [0, b).
  std::size_t subinterval_of(double x) const;

 protected:
  std::size_t choose_cell(double x) override;

 private:
  LevelParams params_;
  bool record_;
  std::vector<std::int64_t> pointer_;
  std::vector<std::size_t> counts_;
  std::unique_ptr<Strategy> box_sorter_;
  std::vector<std::unique_ptr<Strategy>> in_box_;
  std::size_t s_count_ = 0;
  std::vector<NodeRecord> records_;
};

}  // namespace sortbench

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
#include <string>
#include <string_view>
#include <vector>

#include "sortbench/array_state.hpp"
#include "sortbench/omega_params.hpp"

namespace sortbench {

/// Half-open value range [alpha, alpha + beta).
struct Interval {
  double alpha = 0.0;
  double beta = 1.0;

  bool contains(double x) const { return x >= alpha && x < alpha + beta; }
};

/// Length of the normalized interval [0, 1 + 2^-52), which admits the value 1.
inline constexpr double kUnitSpan = 1.0 + 0x1p-52;

enum class StrategyKind { kSorter, kBaseline, kNaiveSequential, kRandomCell };

std::string_view to_string(StrategyKind kind);
/// Throws kInvalidSpec for unknown names.
StrategyKind parse_strategy_kind(std::string_view name);

struct StrategySpec {
  StrategyKind kind = StrategyKind::kSorter;
  std::uint64_t seed = 0;  // random_cell only
  bool record = false;     // keep per-node placement records for the audit
};

/// One placement as seen by a single Sorter_k node.
struct NodeRecord {
  std::size_t step = 0;         // 0-based index among this node's placements
  double value = 0.0;
  std::uint32_t subinterval = 0;
  std::uint32_t box = 0;
  std::uint32_t in_box = 0;     // cell inside the box
  bool routed = false;          // went through the box sorter
};

/// Bookkeeping of one Sorter_k node, detached from the live strategy.
struct NodeSnapshot {
  std::string path;
  int depth = 0;
  LevelParams params;
  std::size_t s_count = 0;
  std::vector<std::size_t> counts;
  std::vector<NodeRecord> records;
};

/// An online placement policy. place() is called at most capacity() times;
/// each call picks an empty cell using only the values seen so far.
/// Instances are not thread-safe but may be moved between threads.
class Strategy {
 public:
  Strategy(std::size_t capacity, std::size_t size, Interval interval);
  virtual ~Strategy() = default;

  Strategy(const Strategy&) = delete;
  Strategy& operator=(const Strategy&) = delete;

  /// Places x and returns its cell. Throws kValueOutOfInterval if x is
  /// outside interval(), kCapacityExceeded once capacity() values are placed
  /// or when a recursive child cannot place.
  std::size_t place(double x);

  const ArrayState& array() const noexcept { return array_; }
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t placed() const noexcept { return array_.occupied(); }
  const Interval& interval() const noexcept { return interval_; }

  virtual std::string_view name() const = 0;

  /// Nesting depth of Sorter_k nodes below and including this one.
  virtual int recursion_depth() const { return 0; }

  /// Appends a snapshot of every Sorter_k node in this subtree, parents
  /// before children.
  virtual void collect_nodes(std::vector<NodeSnapshot>& out,
                             const std::string& path, int depth) const;

 protected:
  virtual std::size_t choose_cell(double x) = 0;

 private:
  std::size_t capacity_;
  Interval interval_;
  ArrayState array_;
};

/// Builds a strategy over `N` cells accepting up to `n_cap` values from
/// `interval`. For kSorter: k <= 1 yields the baseline, as does a degenerate
/// level; k and delta are ignored by the other kinds.
/// Throws kInvalidParams unless N >= n_cap >= 1, beta > 0 and, for a sorter
/// with k >= 2, delta in (0, 1/2).
std::unique_ptr<Strategy> new_strategy(const StrategySpec& spec, int k,
                                       double delta, std::size_t n_cap,
                                       std::size_t N, Interval interval);

/// Snapshots of all Sorter_k nodes of `root`; empty for non-sorter trees.
std::vector<NodeSnapshot> snapshot_tree(const Strategy& root);

}  // namespace sortbench

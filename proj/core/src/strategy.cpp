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

#include "sortbench/strategy.hpp"

#include <string>
#include <variant>

#include "sortbench/baseline.hpp"
#include "sortbench/comparators.hpp"
#include "sortbench/error.hpp"
#include "sortbench/sorter.hpp"

namespace sortbench {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kSorter: return "sorter";
    case StrategyKind::kBaseline: return "baseline";
    case StrategyKind::kNaiveSequential: return "naive_sequential";
    case StrategyKind::kRandomCell: return "random_cell";
  }
  return "unknown";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (auto kind : {StrategyKind::kSorter, StrategyKind::kBaseline,
                    StrategyKind::kNaiveSequential, StrategyKind::kRandomCell}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kInvalidSpec,
              "unknown strategy '" + std::string(name) + "'");
}

Strategy::Strategy(std::size_t capacity, std::size_t size, Interval interval)
    : capacity_(capacity), interval_(interval), array_(size) {}

std::size_t Strategy::place(double x) {
  if (!interval_.contains(x)) {
    throw Error(ErrorCode::kValueOutOfInterval,
                std::to_string(x) + " outside [" +
                    std::to_string(interval_.alpha) + ", " +
                    std::to_string(interval_.alpha + interval_.beta) + ")");
  }
  if (placed() >= capacity_) {
    throw Error(ErrorCode::kCapacityExceeded,
                std::string(name()) + " already holds its capacity of " +
                    std::to_string(capacity_));
  }
  const std::size_t cell = choose_cell(x);
  array_.put(cell, x);
  return cell;
}

void Strategy::collect_nodes(std::vector<NodeSnapshot>&, const std::string&,
                             int) const {}

std::unique_ptr<Strategy> new_strategy(const StrategySpec& spec, int k,
                                       double delta, std::size_t n_cap,
                                       std::size_t N, Interval interval) {
  if (n_cap < 1 || N < n_cap || !(interval.beta > 0.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "need N >= n_cap >= 1 and beta > 0 (n_cap=" +
                    std::to_string(n_cap) + ", N=" + std::to_string(N) + ")");
  }
  switch (spec.kind) {
    case StrategyKind::kBaseline:
      return std::make_unique<BaselineStrategy>(n_cap, N, interval);
    case StrategyKind::kNaiveSequential:
      return std::make_unique<NaiveSequentialStrategy>(n_cap, N, interval);
    case StrategyKind::kRandomCell:
      return std::make_unique<RandomCellStrategy>(n_cap, N, interval,
                                                  spec.seed);
    case StrategyKind::kSorter:
      break;
  }
  if (k <= 1) return std::make_unique<BaselineStrategy>(n_cap, N, interval);
  if (!(delta > 0.0 && delta < 0.5)) {
    throw Error(ErrorCode::kInvalidParams,
                "sorter needs delta in (0, 1/2), got " + std::to_string(delta));
  }
  LevelResult level =
      derive_level(k, delta, n_cap, N, interval.alpha, interval.beta);
  if (const auto* params = std::get_if<LevelParams>(&level)) {
    return std::make_unique<SorterStrategy>(*params, spec.record);
  }
  return std::make_unique<BaselineStrategy>(n_cap, N, interval);
}

std::vector<NodeSnapshot> snapshot_tree(const Strategy& root) {
  std::vector<NodeSnapshot> nodes;
  root.collect_nodes(nodes, "root", 0);
  return nodes;
}

}  // namespace sortbench

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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "sortbench/baseline.hpp"
#include "sortbench/comparators.hpp"
#include "sortbench/error.hpp"
#include "sortbench/metrics.hpp"
#include "sortbench/rng.hpp"
#include "sortbench/run.hpp"
#include "sortbench/strategy.hpp"
#include "sortbench/workloads.hpp"

namespace sortbench {
namespace {

// Adversary choice computed by trying every candidate in every empty cell
// and measuring the actual cost increase.
double adversary_oracle(const ArrayState& array,
                        const std::vector<double>& emitted) {
  std::vector<double> candidates{0.0, 1.0};
  std::vector<double> sorted = emitted;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    candidates.push_back((sorted[i - 1] + sorted[i]) / 2.0);
  }
  std::sort(candidates.begin(), candidates.end());

  const double before = cost(array);
  double best = 0.0;
  double best_score = -1.0;
  for (double c : candidates) {
    double score = std::numeric_limits<double>::infinity();
    for (std::size_t cell = 0; cell < array.size(); ++cell) {
      if (!array.is_empty(cell)) continue;
      std::vector<std::optional<double>> cells(array.cells().begin(),
                                               array.cells().end());
      cells[cell] = c;
      score = std::min(score, cost(cells) - before);
    }
    if (score > best_score + 1e-12) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

TEST(WorkloadNamesTest, RoundTrip) {
  EXPECT_EQ(all_workload_kinds().size(), 7u);
  for (WorkloadKind kind : all_workload_kinds()) {
    EXPECT_EQ(parse_workload_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_workload_kind("gaussian"), Error);
}

TEST(WorkloadTest, SortedStreams) {
  EXPECT_EQ(generate_stream({WorkloadKind::kSortedAsc, 4, 0}),
            (std::vector<double>{0.0, 1.0 / 3, 2.0 / 3, 1.0}));
  EXPECT_EQ(generate_stream({WorkloadKind::kSortedDesc, 4, 0}),
            (std::vector<double>{1.0, 2.0 / 3, 1.0 / 3, 0.0}));
  EXPECT_EQ(generate_stream({WorkloadKind::kSortedAsc, 1, 0}),
            (std::vector<double>{0.0}));
}

TEST(WorkloadTest, IntervalFloodSeedsThenFloods) {
  const auto v = generate_stream({WorkloadKind::kIntervalFlood, 9, 3, 0.2, 0.01});
  ASSERT_EQ(v.size(), 9u);
  EXPECT_EQ(std::vector<double>(v.begin(), v.begin() + 3),
            (std::vector<double>{0.0, 0.5, 1.0}));
  const auto [lo, hi] = std::minmax_element(v.begin() + 3, v.end());
  EXPECT_LE(*hi - *lo, 0.01);
}

TEST(WorkloadTest, TwoClusterAvoidsTheGap) {
  const auto v = generate_stream({WorkloadKind::kTwoCluster, 1000, 5, 0.3});
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t % 2 == 0) {
      EXPECT_LT(v[t], 0.35);
    } else {
      EXPECT_GE(v[t], 0.65);
    }
  }
}

TEST(WorkloadTest, SawtoothIsTheGoldenRotation) {
  const auto v = generate_stream({WorkloadKind::kSawtooth, 50, 0});
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const double x = static_cast<double>(t) * phi;
    EXPECT_EQ(v[t], x - std::floor(x));
  }
}

TEST(WorkloadTest, ValuesInUnitIntervalAndSeeded) {
  for (WorkloadKind kind : all_workload_kinds()) {
    if (kind == WorkloadKind::kMidpointAdversary) continue;
    const auto a = generate_stream({kind, 777, 12});
    EXPECT_EQ(a.size(), 777u);
    EXPECT_EQ(a, generate_stream({kind, 777, 12})) << to_string(kind);
    for (double x : a) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
      EXPECT_LT(x, kUnitSpan);
    }
  }
  EXPECT_NE(generate_stream({WorkloadKind::kUniform, 10, 1}),
            generate_stream({WorkloadKind::kUniform, 10, 2}));
}

TEST(WorkloadTest, RejectsBadSpecs) {
  EXPECT_THROW(generate_stream({WorkloadKind::kUniform, 0, 0}), Error);
  EXPECT_THROW(generate_stream({WorkloadKind::kMidpointAdversary, 5, 0}),
               Error);
  EXPECT_THROW(generate_stream({WorkloadKind::kTwoCluster, 5, 0, 1.5}), Error);
  EXPECT_THROW(generate({WorkloadKind::kIntervalFlood, 5, 0, 0.2, 0.0}),
               Error);
}

TEST(WorkloadTest, GenerateWrapsStreams) {
  auto source = generate({WorkloadKind::kSortedAsc, 3, 0});
  EXPECT_FALSE(source->adaptive());
  ArrayState empty(3);
  EXPECT_EQ(source->next(empty), 0.0);
  EXPECT_EQ(source->next(empty), 0.5);
  EXPECT_TRUE(generate({WorkloadKind::kMidpointAdversary, 3, 0})->adaptive());
}

TEST(AdversaryTest, OpensWithZeroThenOne) {
  ArrayState array(4);
  EXPECT_EQ(midpoint_adversary_next(array, {}), 0.0);
  array.put(0, 0.0);
  // 1 at distance 1 beats every other candidate (only 0 and 1 exist).
  EXPECT_EQ(midpoint_adversary_next(array, std::vector<double>{0.0}), 1.0);
}

TEST(AdversaryTest, MidpointBetweenNeighbours) {
  ArrayState array(3);
  array.put(0, 0.0);
  array.put(2, 1.0);
  // The only hole sits between 0 and 1, so every candidate costs 0 there.
  const std::vector<double> emitted{0.0, 1.0};
  EXPECT_EQ(midpoint_adversary_next(array, emitted), 0.0);
  EXPECT_EQ(adversary_oracle(array, emitted), 0.0);

  ArrayState spread(4);
  spread.put(0, 0.0);
  spread.put(1, 1.0);
  // Holes after the 1: 0.5 costs 0.5 anywhere, 0 costs 1, 1 costs 0.
  EXPECT_EQ(midpoint_adversary_next(spread, emitted), 0.0);
  EXPECT_EQ(adversary_oracle(spread, emitted), 0.0);
}

TEST(AdversaryTest, IncrementalMatchesReferenceAndOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t N = 2 + rng.below(9);
    const std::size_t n = 1 + rng.below(N);
    ArrayState array(N);
    MidpointAdversary fast;
    std::vector<double> emitted;
    for (std::size_t t = 0; t < n; ++t) {
      const double ref = midpoint_adversary_next(array, emitted);
      EXPECT_EQ(ref, adversary_oracle(array, emitted));
      EXPECT_EQ(fast.next(array), ref) << "trial " << trial << " step " << t;
      // A random (not necessarily sensible) placement policy.
      std::size_t cell = rng.below(N);
      while (!array.is_empty(cell)) cell = (cell + 1) % N;
      array.put(cell, ref);
      fast.observe(cell, ref);
      emitted.push_back(ref);
    }
  }
}

TEST(AdversaryTest, HurtsTheNaiveStrategyMoreThanUniform) {
  const std::size_t n = 2000;
  NaiveSequentialStrategy uniform_run(n, 2 * n, {0.0, kUnitSpan});
  run(uniform_run, generate_stream({WorkloadKind::kUniform, n, 1}));
  NaiveSequentialStrategy adv_run(n, 2 * n, {0.0, kUnitSpan});
  auto adversary = generate({WorkloadKind::kMidpointAdversary, n, 1});
  run(adv_run, *adversary, n);
  EXPECT_GE(cost(adv_run.array()), cost(uniform_run.array()));
}

TEST(AdversaryTest, DrivesBaselineThroughRunLoop) {
  const std::size_t n = 500;
  BaselineStrategy s(n, n + n / 2, {0.0, kUnitSpan});
  auto adversary = generate({WorkloadKind::kMidpointAdversary, n, 0});
  const RunResult r = run(s, *adversary, n);
  EXPECT_EQ(r.array.occupied(), n);
  for (const Placement& p : r.trace) {
    EXPECT_GE(p.value, 0.0);
    EXPECT_LE(p.value, 1.0);
  }
}

}  // namespace
}  // namespace sortbench

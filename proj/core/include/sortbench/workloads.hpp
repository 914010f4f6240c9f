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
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sortbench/array_state.hpp"
#include "sortbench/run.hpp"

namespace sortbench {

enum class WorkloadKind {
  kUniform,
  kSortedAsc,
  kSortedDesc,
  kTwoCluster,
  kIntervalFlood,
  kSawtooth,
  kMidpointAdversary,
};

std::string_view to_string(WorkloadKind kind);
/// Throws kInvalidSpec for unknown names.
WorkloadKind parse_workload_kind(std::string_view name);
/// All kinds in declaration order.
std::span<const WorkloadKind> all_workload_kinds();

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::kUniform;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double gap = 0.2;           // two_cluster: width of the empty middle band
  double flood_width = 0.01;  // interval_flood: width of the flooded range
};

/// Materializes an oblivious workload. Every value lies in [0, 1]; 1 only
/// appears in the sorted and flood prefixes, so runs use [0, kUnitSpan).
///   uniform        53-bit uniforms from Rng(seed, kWorkloadStream)
///   sorted_asc     j / (n - 1) for j = 0..n-1 (just 0 when n = 1)
///   sorted_desc    the same, reversed
///   two_cluster    alternates [0, 0.5 - gap/2) and [0.5 + gap/2, 1)
///   interval_flood ceil(sqrt n) equally spaced points on [0, 1], then
///                  uniforms in one window of width flood_width
///   sawtooth       frac(t * (sqrt(5) - 1) / 2)
/// Throws kInvalidSpec for n < 1, bad parameters, or an adaptive kind.
std::vector<double> generate_stream(const WorkloadSpec& spec);

/// A source for any kind: oblivious kinds replay generate_stream, the
/// adaptive kind returns a MidpointAdversary.
std::unique_ptr<ValueSource> generate(const WorkloadSpec& spec);

/// Replays a fixed sequence.
class StreamSource final : public ValueSource {
 public:
  explicit StreamSource(std::vector<double> values)
      : values_(std::move(values)) {}

  double next(const ArrayState&) override { return values_.at(pos_++); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
  std::size_t pos_ = 0;
};

/// Reference rule for the adaptive adversary, straight from its definition.
/// Candidates are {0, 1} plus the midpoints of consecutive distinct emitted
/// values. A candidate's score is the least increase in cost it can cause,
/// minimised over every empty cell given the current contents; the highest
/// score wins, ties going to the smaller value. O(candidates * N).
double midpoint_adversary_next(const ArrayState& array,
                               std::span<const double> emitted);

/// Same choices as midpoint_adversary_next, maintained incrementally.
///
/// Empty cells are grouped into gaps (maximal empty runs). A gap with
/// occupied neighbours L and R charges 2 * dist(c, [min(L,R), max(L,R)]);
/// a gap touching an array end charges |c - neighbour|. So a candidate's
/// score is min(2 * dist(c, U), edge terms) where U is the union of the
/// interior gaps' hulls, and one sorted sweep over candidates and U per step
/// suffices. Cost per step is linear in the number of emitted values.
class MidpointAdversary final : public ValueSource {
 public:
  double next(const ArrayState& array) override;
  void observe(std::size_t cell, double value) override;
  bool adaptive() const override { return true; }

 private:
  using Segment = std::pair<double, double>;  // (lo, hi)

  void add_segment(double a, double b);
  void remove_segment(double a, double b);

  std::size_t size_ = 0;
  std::vector<double> cell_value_;
  std::set<std::size_t> occupied_;
  std::vector<double> distinct_;   // sorted emitted values
  std::vector<Segment> segments_;  // interior gap hulls, sorted
  std::vector<Segment> merged_;    // scratch
};

}  // namespace sortbench

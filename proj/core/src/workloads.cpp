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

#include "sortbench/workloads.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "sortbench/error.hpp"
#include "sortbench/rng.hpp"

namespace sortbench {
namespace {

constexpr std::array kKinds = {
    WorkloadKind::kUniform,       WorkloadKind::kSortedAsc,
    WorkloadKind::kSortedDesc,    WorkloadKind::kTwoCluster,
    WorkloadKind::kIntervalFlood, WorkloadKind::kSawtooth,
    WorkloadKind::kMidpointAdversary,
};

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t ceil_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

std::vector<double> equally_spaced(std::size_t count) {
  std::vector<double> out(count, 0.0);
  for (std::size_t j = 1; j < count; ++j) {
    out[j] = static_cast<double>(j) / static_cast<double>(count - 1);
  }
  return out;
}

void validate(const WorkloadSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::kInvalidSpec, "workload n must be >= 1");
  if (!(spec.gap >= 0.0 && spec.gap < 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "two_cluster gap must lie in [0, 1)");
  }
  if (!(spec.flood_width > 0.0 && spec.flood_width <= 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "flood_width must lie in (0, 1]");
  }
}

}  // namespace

std::string_view to_string(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kUniform: return "uniform";
    case WorkloadKind::kSortedAsc: return "sorted_asc";
    case WorkloadKind::kSortedDesc: return "sorted_desc";
    case WorkloadKind::kTwoCluster: return "two_cluster";
    case WorkloadKind::kIntervalFlood: return "interval_flood";
    case WorkloadKind::kSawtooth: return "sawtooth";
    case WorkloadKind::kMidpointAdversary: return "midpoint_adversary";
  }
  return "unknown";
}

WorkloadKind parse_workload_kind(std::string_view name) {
  for (WorkloadKind kind : kKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kInvalidSpec,
              "unknown workload '" + std::string(name) + "'");
}

std::span<const WorkloadKind> all_workload_kinds() { return kKinds; }

std::vector<double> generate_stream(const WorkloadSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  Rng rng(spec.seed, kWorkloadStream);
  std::vector<double> out;
  out.reserve(n);

  switch (spec.kind) {
    case WorkloadKind::kUniform:
      for (std::size_t t = 0; t < n; ++t) out.push_back(rng.uniform());
      break;
    case WorkloadKind::kSortedAsc:
      out = equally_spaced(n);
      break;
    case WorkloadKind::kSortedDesc:
      out = equally_spaced(n);
      std::reverse(out.begin(), out.end());
      break;
    case WorkloadKind::kTwoCluster: {
      const double width = 0.5 - spec.gap / 2.0;
      const double high = 0.5 + spec.gap / 2.0;
      for (std::size_t t = 0; t < n; ++t) {
        const double u = rng.uniform() * width;
        out.push_back(t % 2 == 0 ? u : high + u);
      }
      break;
    }
    case WorkloadKind::kIntervalFlood: {
      out = equally_spaced(std::min(n, ceil_sqrt(n)));
      const double start = rng.uniform() * (1.0 - spec.flood_width);
      while (out.size() < n) {
        out.push_back(start + rng.uniform() * spec.flood_width);
      }
      break;
    }
    case WorkloadKind::kSawtooth: {
      const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
      for (std::size_t t = 0; t < n; ++t) {
        const double x = static_cast<double>(t) * phi;
        out.push_back(x - std::floor(x));
      }
      break;
    }
    case WorkloadKind::kMidpointAdversary:
      throw Error(ErrorCode::kInvalidSpec,
                  "midpoint_adversary is adaptive; use generate()");
  }
  return out;
}

std::unique_ptr<ValueSource> generate(const WorkloadSpec& spec) {
  validate(spec);
  if (spec.kind == WorkloadKind::kMidpointAdversary) {
    return std::make_unique<MidpointAdversary>();
  }
  return std::make_unique<StreamSource>(generate_stream(spec));
}

double midpoint_adversary_next(const ArrayState& array,
                               std::span<const double> emitted) {
  std::vector<double> distinct(emitted.begin(), emitted.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::vector<double> candidates = {0.0, 1.0};
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    candidates.push_back((distinct[i] + distinct[i + 1]) / 2.0);
  }
  std::sort(candidates.begin(), candidates.end());

  // Nearest occupied value on each side of every cell.
  const std::size_t N = array.size();
  std::vector<std::optional<double>> left(N), right(N);
  std::optional<double> seen;
  for (std::size_t e = 0; e < N; ++e) {
    left[e] = seen;
    if (array[e]) seen = array[e];
  }
  seen.reset();
  for (std::size_t e = N; e-- > 0;) {
    right[e] = seen;
    if (array[e]) seen = array[e];
  }

  double best = candidates.front();
  double best_score = -1.0;
  for (double c : candidates) {
    double score = kInf;
    for (std::size_t e = 0; e < N; ++e) {
      if (array[e]) continue;
      double inc = 0.0;
      if (left[e] && right[e]) {
        inc = std::fabs(c - *left[e]) + std::fabs(c - *right[e]) -
              std::fabs(*left[e] - *right[e]);
      } else if (left[e]) {
        inc = std::fabs(c - *left[e]);
      } else if (right[e]) {
        inc = std::fabs(c - *right[e]);
      }
      score = std::min(score, inc);
    }
    if (score == kInf) score = 0.0;  // no empty cell
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

double MidpointAdversary::next(const ArrayState& array) {
  if (cell_value_.empty()) {
    size_ = array.size();
    cell_value_.assign(size_, 0.0);
  }

  merged_.clear();
  for (const Segment& s : segments_) {
    if (!merged_.empty() && s.first <= merged_.back().second) {
      merged_.back().second = std::max(merged_.back().second, s.second);
    } else {
      merged_.push_back(s);
    }
  }

  bool has_left_edge = false;
  bool has_right_edge = false;
  double left_edge = 0.0;
  double right_edge = 0.0;
  if (!occupied_.empty()) {
    const std::size_t first = *occupied_.begin();
    const std::size_t last = *occupied_.rbegin();
    has_left_edge = first > 0;
    has_right_edge = last + 1 < size_;
    left_edge = cell_value_[first];
    right_edge = cell_value_[last];
  }

  std::size_t piece = 0;
  double best = 0.0;
  double best_score = -1.0;
  auto consider = [&](double c) {
    double score = 0.0;
    if (!occupied_.empty()) {
      score = kInf;
      while (piece < merged_.size() && merged_[piece].second < c) ++piece;
      if (!merged_.empty()) {
        double dist = kInf;
        if (piece < merged_.size()) {
          dist = merged_[piece].first <= c ? 0.0 : merged_[piece].first - c;
        }
        if (piece > 0) dist = std::min(dist, c - merged_[piece - 1].second);
        score = 2.0 * dist;
      }
      if (has_left_edge) score = std::min(score, std::fabs(c - left_edge));
      if (has_right_edge) score = std::min(score, std::fabs(c - right_edge));
      if (score == kInf) score = 0.0;
    }
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  };

  consider(0.0);
  for (std::size_t i = 0; i + 1 < distinct_.size(); ++i) {
    consider((distinct_[i] + distinct_[i + 1]) / 2.0);
  }
  consider(1.0);
  return best;
}

void MidpointAdversary::add_segment(double a, double b) {
  const Segment s{std::min(a, b), std::max(a, b)};
  segments_.insert(std::upper_bound(segments_.begin(), segments_.end(), s), s);
}

void MidpointAdversary::remove_segment(double a, double b) {
  const Segment s{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(segments_.begin(), segments_.end(), s);
  if (it != segments_.end() && *it == s) segments_.erase(it);
}

void MidpointAdversary::observe(std::size_t cell, double value) {
  auto after = occupied_.lower_bound(cell);
  const bool has_next = after != occupied_.end();
  const bool has_prev = after != occupied_.begin();
  const std::size_t next_cell = has_next ? *after : 0;
  const std::size_t prev_cell = has_prev ? *std::prev(after) : 0;

  if (has_prev && has_next) {
    remove_segment(cell_value_[prev_cell], cell_value_[next_cell]);
  }
  if (has_prev && cell - prev_cell > 1) {
    add_segment(cell_value_[prev_cell], value);
  }
  if (has_next && next_cell - cell > 1) {
    add_segment(value, cell_value_[next_cell]);
  }

  occupied_.insert(after, cell);
  cell_value_[cell] = value;
  auto pos = std::lower_bound(distinct_.begin(), distinct_.end(), value);
  if (pos == distinct_.end() || *pos != value) distinct_.insert(pos, value);
}

}  // namespace sortbench

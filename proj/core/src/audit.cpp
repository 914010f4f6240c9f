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

#include "sortbench/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sortbench {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Auditor {
 public:
  explicit Auditor(AuditReport& report) : report_(report) {}

  void fail(std::string invariant, std::string node, std::size_t step,
            std::string detail) {
    report_.violations.push_back(Violation{std::move(invariant),
                                           std::move(node), step,
                                           std::move(detail)});
  }

  void check_top(const TopLevelConfig& top) {
    const double scaled = std::ldexp(top.delta, top.k + 1);
    if (std::fabs(scaled - top.epsilon) >
        std::nextafter(top.epsilon, 4.0) - top.epsilon) {
      fail("top_config", "top", 0, "2^(k+1) delta != epsilon");
    }
    if (!(top.delta > 0.0 && top.delta < 0.5)) {
      fail("top_config", "top", 0, "delta outside (0, 1/2)");
    }
    if (top.N < top.n) fail("top_config", "top", 0, "N < n");
  }

  void check_trace(const PlacementTrace& trace, const TopLevelConfig& top) {
    if (trace.size() > top.n) {
      fail("stream_length", "trace", trace.size() - 1,
           std::to_string(trace.size()) + " values for n = " +
               std::to_string(top.n));
    }
    std::vector<bool> used(top.N, false);
    for (const Placement& p : trace) {
      if (p.cell >= top.N) {
        fail("cell_range", "trace", p.step,
             "cell " + std::to_string(p.cell) + " >= N");
        continue;
      }
      if (used[p.cell]) {
        fail("single_occupancy", "trace", p.step,
             "cell " + std::to_string(p.cell) + " reused");
      }
      used[p.cell] = true;
    }
  }

  void check_node(const NodeSnapshot& node) {
    const LevelParams& p = node.params;
    const double route_slack = 1.0 + level_slack(p.k - 3, p.delta);

    std::vector<std::size_t> pointer(p.b, kNone);
    std::vector<std::size_t> assigned(p.ell, kNone);
    std::vector<std::size_t> counts(p.ell, 0);
    std::vector<bool> used(p.ell * p.w, false);
    std::size_t routed = 0;

    if (node.records.size() > p.n_cap) {
      fail("stream_length", node.path, node.records.size() - 1,
           "node received more than n_cap values");
    }

    for (const NodeRecord& r : node.records) {
      const std::size_t sub = r.subinterval;
      const std::size_t box = r.box;
      if (sub >= p.b || box >= p.ell || r.in_box >= p.w) {
        fail("cell_range", node.path, r.step, "record outside the level");
        continue;
      }
      if (subinterval_of(p, r.value) != sub) {
        fail("box_purity", node.path, r.step,
             "value " + std::to_string(r.value) + " is not in subinterval " +
                 std::to_string(sub));
      }

      const std::size_t live = pointer[sub];
      const bool live_open = live != kNone && counts[live] < p.n_prime;
      if (r.routed) {
        if (live_open) {
          fail("pointer", node.path, r.step,
               "routed although box " + std::to_string(live) + " was open");
        }
        if (assigned[box] != kNone) {
          fail("box_reuse", node.path, r.step,
               "box " + std::to_string(box) + " handed out twice");
        }
        assigned[box] = sub;
        pointer[sub] = box;
        ++routed;
        if (static_cast<double>(routed) * route_slack >
            static_cast<double>(p.ell)) {
          fail("claim3", node.path, r.step,
               "|S| = " + std::to_string(routed) + " exceeds ell / (1 + " +
                   "2^(k-3) delta) with ell = " + std::to_string(p.ell));
        }
      } else if (!live_open || live != box) {
        fail("pointer", node.path, r.step,
             "box " + std::to_string(box) +
                 " is not the open box of subinterval " + std::to_string(sub));
      }
      if (assigned[box] != sub) {
        fail("box_purity", node.path, r.step,
             "box " + std::to_string(box) + " mixes subintervals");
      }
      if (++counts[box] > p.n_prime) {
        fail("box_capacity", node.path, r.step,
             "box " + std::to_string(box) + " holds " +
                 std::to_string(counts[box]) + " > n' = " +
                 std::to_string(p.n_prime));
      }
      const std::size_t local = box * p.w + r.in_box;
      if (used[local]) {
        fail("single_occupancy", node.path, r.step,
             "cell " + std::to_string(local) + " reused");
      }
      used[local] = true;
    }

    // Without records (recording disabled) fall back to the live counters.
    const bool replayed = !node.records.empty() || node.s_count == 0;
    const std::size_t s_count = replayed ? routed : node.s_count;
    if (!replayed) {
      counts.assign(node.counts.begin(), node.counts.end());
      for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] > p.n_prime) {
          fail("box_capacity", node.path, 0,
               "box " + std::to_string(j) + " holds more than n'");
        }
      }
      if (static_cast<double>(s_count) * route_slack >
          static_cast<double>(p.ell)) {
        fail("claim3", node.path, 0, "|S| exceeds ell / (1 + 2^(k-3) delta)");
      }
    } else if (routed != node.s_count) {
      fail("records", node.path, 0, "record count disagrees with s_count");
    }

    const double d = p.delta;
    const int k = p.k;
    const double ell_bound = (1.0 + level_slack(k, d)) /
                             level_slack(k - 5, d) * static_cast<double>(p.b);
    if (static_cast<double>(p.ell) > ell_bound) {
      fail("ell_bound", node.path, 0,
           "ell = " + std::to_string(p.ell) + " > " + std::to_string(ell_bound));
    }
    const double s_bound =
        (std::ldexp(1.0, 7 - 2 * k) / (d * d) + std::ldexp(1.0, 7 - k) / d) *
        std::pow(static_cast<double>(p.n_cap), omega_ratio(k - 4, k));
    if (static_cast<double>(s_count) > s_bound) {
      fail("s_bound", node.path, 0,
           "|S| = " + std::to_string(s_count) + " > " +
               std::to_string(s_bound));
    }

    LevelStats stats;
    stats.node = node.path;
    stats.depth = node.depth;
    stats.k = k;
    stats.ell = p.ell;
    stats.b = p.b;
    stats.n_prime = p.n_prime;
    stats.w = p.w;
    stats.s_count = s_count;
    stats.max_box_count =
        counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    report_.per_level.push_back(std::move(stats));
  }

 private:
  // Same formula as SorterStrategy::subinterval_of.
  static std::size_t subinterval_of(const LevelParams& p, double x) {
    const double scaled =
        std::floor((x - p.alpha) / p.beta * static_cast<double>(p.b));
    return static_cast<std::size_t>(
        std::clamp(scaled, 0.0, static_cast<double>(p.b - 1)));
  }

  AuditReport& report_;
};

}  // namespace

AuditReport audit(const PlacementTrace& trace, const TopLevelConfig& top,
                  std::span<const NodeSnapshot> tree) {
  AuditReport report;
  Auditor auditor(report);
  auditor.check_top(top);
  auditor.check_trace(trace, top);
  for (const NodeSnapshot& node : tree) auditor.check_node(node);
  report.pass = report.violations.empty();
  return report;
}

}  // namespace sortbench

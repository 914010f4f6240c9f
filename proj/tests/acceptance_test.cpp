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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. argv[1] is the path of the sortbench CLI.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sortbench/baseline.hpp"
#include "sortbench/experiment.hpp"
#include "sortbench/metrics.hpp"
#include "sortbench/omega_params.hpp"
#include "sortbench/rng.hpp"
#include "sortbench/run.hpp"
#include "sortbench/strategy.hpp"
#include "sortbench/workloads.hpp"

namespace {

using namespace sortbench;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_bin_float_100;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      pass = false;
    }
  }
};

// floor(c * n^(p/q)) as the largest m with m^q <= c^q * n^p.
std::int64_t floor_scaled_root(const cpp_rational& c, std::int64_t n,
                               unsigned p, unsigned q) {
  const cpp_int rhs = pow(numerator(c), q) * pow(cpp_int(n), p);
  const cpp_int scale = pow(denominator(c), q);
  auto fits = [&](std::int64_t m) { return pow(cpp_int(m), q) * scale <= rhs; };
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (fits(hi)) hi *= 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

const std::vector<double> kEpsilons{0.25, 0.5, 1.0, 2.0, 3.0};
const std::vector<std::size_t> kNs{100, 1000, 10000, 100000};
const std::vector<std::uint64_t> kSeeds{1, 2, 3};

ExperimentConfig sweep_config(std::vector<StrategyKind> strategies,
                              bool audit) {
  ExperimentConfig c;
  c.strategies = std::move(strategies);
  for (WorkloadKind kind : all_workload_kinds()) {
    c.workloads.push_back(WorkloadSpec{kind});
  }
  c.ns = kNs;
  c.epsilons = kEpsilons;
  c.seeds = kSeeds;
  c.audit = audit;
  return c;
}

// Rows of the correctness sweep, shared by criteria 3 and 4.
std::vector<ExperimentRow> g_sorter_rows;

Outcome omega_sequence() {
  Outcome o;
  const std::vector<std::uint64_t> expected{4, 6, 8, 10, 14, 20, 28, 38, 52};
  for (int i = 2; i <= 10; ++i) {
    o.check(omega(i) == expected[static_cast<std::size_t>(i - 2)],
            "omega(" + std::to_string(i) + ") mismatch");
  }
  // Independent bisection on x^4 - x^3 - 1 in 100-digit arithmetic.
  Big lo = 1, hi = 2;
  for (int it = 0; it < 200; ++it) {
    const Big mid = (lo + hi) / 2;
    (mid * mid * mid * mid - mid * mid * mid - 1 < 0 ? lo : hi) = mid;
  }
  const double root = static_cast<double>(lo);
  const double ratio = omega_ratio(61, 60);
  o.check(std::abs(ratio - root) <= 1e-3, "omega(61)/omega(60) far from root");
  o.check(std::abs(growth_root() - root) <= 1e-9, "growth_root inaccurate");
  o.detail << "omega(61)/omega(60)=" << ratio << " root=" << root;
  return o;
}

Outcome parameter_goldens() {
  Outcome o;
  const LevelResult r = derive_level(2, 0.1, 10000, 18000, 0.0, 1.0);
  const auto* p = std::get_if<LevelParams>(&r);
  o.check(p != nullptr, "golden level degenerate");
  if (p) {
    const cpp_rational d(0.1);
    const cpp_rational fill = 2 * d / (1 + 4 * d);
    const std::int64_t n_prime = floor_scaled_root(fill, 10000, 2, 4);
    const cpp_rational width = (1 + 4 * d) * n_prime;
    const auto w = static_cast<std::int64_t>(
        cpp_int(numerator(width) / denominator(width)));
    const std::int64_t ell = 18000 / w;
    const std::int64_t b = floor_scaled_root(cpp_rational(1), 10000, 2, 4);
    o.check(n_prime == 14 && w == 19 && ell == 947 && b == 100,
            "oracle disagrees with the golden tuple");
    o.check(static_cast<std::int64_t>(p->n_prime) == n_prime &&
                static_cast<std::int64_t>(p->w) == w &&
                static_cast<std::int64_t>(p->ell) == ell &&
                static_cast<std::int64_t>(p->b) == b,
            "derive_level disagrees with the oracle");
    o.detail << "(n'=" << p->n_prime << ", w=" << p->w << ", ell=" << p->ell
             << ", b=" << p->b << ")";
  }
  const TopLevelConfig top = derive_top(1000000, 1.0);
  const Big depth = log(log(Big(1000000)) / log(Big(2))) / log(Big("1.38"));
  const int k = static_cast<int>(floor(depth));
  o.check(top.k == k && k == 9, "derive_top k mismatch");
  o.check(top.delta == 1.0 / 1024, "derive_top delta mismatch");
  o.detail << " top=(k=" << top.k << ", delta=" << top.delta << ")";
  return o;
}

Outcome correctness_sweep() {
  Outcome o;
  g_sorter_rows =
      run_experiment(sweep_config({StrategyKind::kSorter}, true),
                     thread_budget());
  std::size_t failures = 0;
  for (const ExperimentRow& row : g_sorter_rows) {
    if (!row.audit_pass) {
      if (failures == 0) {
        o.detail << row.workload << " n=" << row.n << " eps=" << row.epsilon
                 << " seed=" << row.seed << ": " << row.error << "; ";
      }
      ++failures;
    }
  }
  o.check(g_sorter_rows.size() == 4 * 5 * 7 * 3, "wrong row count");
  o.check(failures == 0, std::to_string(failures) + " rows failed");
  o.detail << g_sorter_rows.size() << " rows, " << failures << " failures";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const OracleSummary summary = run_oracle_suite(6, 9, 500, 20260101);
  o.check(summary.trials == 500 && summary.mismatches == 0,
          std::to_string(summary.mismatches) + " oracle mismatches; ");

  std::vector<ExperimentRow> rows = g_sorter_rows;
  const auto others =
      run_experiment(sweep_config({StrategyKind::kBaseline,
                                   StrategyKind::kNaiveSequential,
                                   StrategyKind::kRandomCell},
                                  true),
                     thread_budget());
  rows.insert(rows.end(), others.begin(), others.end());
  std::size_t below = 0;
  std::size_t failed = 0;
  for (const ExperimentRow& row : rows) {
    if (!row.error.empty()) ++failed;
    if (row.cost < row.opt) ++below;
  }
  o.check(failed == 0, std::to_string(failed) + " rows errored; ");
  o.check(below == 0, std::to_string(below) + " rows with cost < opt; ");
  o.detail << summary.trials << " multisets, " << summary.mismatches
           << " mismatches; " << rows.size() << " sweep rows, " << below
           << " below opt";
  return o;
}

ExperimentRow single_row(StrategyKind strategy, std::size_t n,
                         std::uint64_t seed) {
  return run_point(GridPoint{strategy, {WorkloadKind::kUniform, n, seed}, 1.0,
                             false, false});
}

Outcome cost_sanity() {
  Outcome o;
  const ExperimentRow naive =
      single_row(StrategyKind::kNaiveSequential, 100000, 42);
  const ExperimentRow sorter = single_row(StrategyKind::kSorter, 100000, 42);
  o.check(naive.error.empty() && sorter.error.empty(), "run failed; ");
  o.check(naive.ratio >= 2.5e4 && naive.ratio <= 4.5e4,
          "naive ratio outside [2.5e4, 4.5e4]; ");
  o.check(sorter.ratio * 10.0 <= naive.ratio,
          "sorter ratio not 10x below naive; ");
  o.detail << "naive ratio=" << naive.ratio << " sorter ratio=" << sorter.ratio
           << " (" << naive.ratio / sorter.ratio << "x)";
  return o;
}

Outcome scaling_trend() {
  Outcome o;
  double small = 0.0;
  double large = 0.0;
  for (std::uint64_t seed : kSeeds) {
    const ExperimentRow a = single_row(StrategyKind::kSorter, 10000, seed);
    const ExperimentRow b = single_row(StrategyKind::kSorter, 100000, seed);
    o.check(a.error.empty() && b.error.empty(), "run failed; ");
    small += a.cost / static_cast<double>(kSeeds.size());
    large += b.cost / static_cast<double>(kSeeds.size());
  }
  o.check(large <= 10.0 * small, "cost grew more than 10x");
  o.detail << "avg cost n=1e4: " << small << ", n=1e5: " << large
           << " (x" << large / small << ")";
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("sortbench_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path config = dir / "sweep.json";
  const fs::path out = dir / "rows.csv";
  std::ofstream(config) << R"({
    "strategies": ["sorter", "baseline", "naive_sequential", "random_cell"],
    "workloads": ["uniform", "sorted_asc", "sorted_desc", "two_cluster",
                  "interval_flood", "sawtooth", "midpoint_adversary"],
    "ns": [100, 5000], "epsilons": [0.25, 1, 3], "seeds": [1, 2],
    "audit": true,
    "output": {"format": "csv", "path": ")"
                        << out.string() << R"("}})";
  std::string outputs[2];
  for (std::string& text : outputs) {
    const std::string cmd = cli + " sweep --config " + config.string();
    const int status = std::system(cmd.c_str());
    o.check(WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "sweep exited abnormally; ");
    text = read_file(out);
    fs::remove(out);
  }
  fs::remove_all(dir);
  o.check(!outputs[0].empty() && outputs[0] == outputs[1],
          "sweep outputs differ; ");
  o.detail << "two sweeps, " << outputs[0].size() << " bytes, "
           << (outputs[0] == outputs[1] ? "identical" : "different");

  // Tiny arrays with the level forced to k = 2 (delta = 1/8, epsilon = 1).
  std::size_t fallbacks = 0;
  for (std::size_t n = 2; n <= 16; ++n) {
    const double delta = 0.125;
    const bool degenerate = std::holds_alternative<Degenerate>(
        derive_level(2, delta, n, 2 * n, 0.0, kUnitSpan));
    auto s = new_strategy({StrategyKind::kSorter}, 2, delta, n, 2 * n,
                          {0.0, kUnitSpan});
    o.check(degenerate && s->name() == "baseline",
            "n=" + std::to_string(n) + " did not fall back; ");
    if (s->name() == "baseline") ++fallbacks;
    const RunResult r =
        run(*s, generate_stream({WorkloadKind::kUniform, n, n}));
    o.check(r.array.occupied() == n, "fallback lost elements; ");
  }
  o.detail << "; " << fallbacks << "/15 tiny instances fell back";
  return o;
}

Outcome baseline_identity() {
  Outcome o;
  Rng rng(8);
  std::size_t identical = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(2000);
    const std::size_t N = n + rng.below(2 * n + 1);
    const int k = 1 - static_cast<int>(rng.below(4));
    std::vector<double> stream(n);
    for (double& x : stream) x = rng.uniform();
    auto sorter = new_strategy({StrategyKind::kSorter}, k, 0.25, n, N,
                               {0.0, kUnitSpan});
    BaselineStrategy baseline(n, N, {0.0, kUnitSpan});
    const RunResult a = run(*sorter, stream);
    const RunResult b = run(baseline, stream);
    bool same = a.trace.size() == b.trace.size();
    for (std::size_t i = 0; same && i < a.trace.size(); ++i) {
      same = a.trace[i].cell == b.trace[i].cell &&
             a.trace[i].value == b.trace[i].value;
    }
    if (same) ++identical;
  }
  o.check(identical == 100, "traces differ");
  o.detail << identical << "/100 traces identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <path to sortbench cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"omega sequence and growth root", omega_sequence},
      {"parameter golden values", parameter_goldens},
      {"correctness sweep with audit", correctness_sweep},
      {"brute-force oracle and cost >= opt", oracle_equivalence},
      {"cost sanity at n=1e5", cost_sanity},
      {"scaling trend 1e4 -> 1e5", scaling_trend},
      {"determinism and tiny-instance fallback",
       [&] { return determinism(cli); }},
      {"k <= 1 matches the baseline", baseline_identity},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " -- " << o.detail.str() << " ["
              << std::fixed << std::setprecision(1) << secs << "s]"
              << std::defaultfloat << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}

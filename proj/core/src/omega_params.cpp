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

#include "sortbench/omega_params.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "sortbench/error.hpp"

namespace sortbench {
namespace {

// Index 0 holds omega(1); indices below 1 all map to 2.
using OmegaTable = std::array<OmegaValue, kMaxOmegaIndex>;

OmegaTable build_table() {
  OmegaTable table{};
  auto at = [&table](int i) -> OmegaValue {
    return i <= 1 ? OmegaValue{2} : table[static_cast<std::size_t>(i - 1)];
  };
  table[0] = 2;
  for (int i = 2; i <= kMaxOmegaIndex; ++i) {
    const OmegaValue prev = at(i - 1);
    const OmegaValue back = at(i - 4);
    if (prev > std::numeric_limits<OmegaValue>::max() - back) {
      throw Error(ErrorCode::kInvalidParams, "omega table overflow");
    }
    table[static_cast<std::size_t>(i - 1)] = prev + back;
  }
  return table;
}

const OmegaTable& table() {
  static const OmegaTable kTable = build_table();
  return kTable;
}

}  // namespace

OmegaValue omega(int i) {
  if (i <= 1) return 2;
  if (i > kMaxOmegaIndex) {
    throw Error(ErrorCode::kInvalidParams,
                "omega index " + std::to_string(i) + " exceeds " +
                    std::to_string(kMaxOmegaIndex));
  }
  return table()[static_cast<std::size_t>(i - 1)];
}

double omega_ratio(int num, int den) {
  return static_cast<double>(omega(num)) / static_cast<double>(omega(den));
}

double growth_root() {
  auto f = [](double x) { return x * x * x * x - x * x * x - 1.0; };
  double lo = 1.0;  // f(1) = -1
  double hi = 2.0;  // f(2) = 7
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double level_slack(int j, double delta) { return std::ldexp(delta, j); }

TopLevelConfig derive_top(std::size_t n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 3.0)) {
    throw Error(ErrorCode::kInvalidEpsilon,
                "epsilon must lie in (0, 3], got " + std::to_string(epsilon));
  }
  if (n < 2) {
    throw Error(ErrorCode::kInvalidN, "n must be at least 2");
  }
  TopLevelConfig top;
  top.n = n;
  top.epsilon = epsilon;
  const double inner = std::log2(static_cast<double>(n));
  const double depth = std::floor(std::log(inner) / std::log(1.38));
  top.k = depth > 0.0 ? static_cast<int>(depth) : 0;
  top.delta = std::ldexp(epsilon, -(top.k + 1));
  while (top.delta >= 0.5) {
    ++top.k;
    top.delta = std::ldexp(epsilon, -(top.k + 1));
  }
  top.N = static_cast<std::size_t>(
      std::floor((1.0 + epsilon) * static_cast<double>(n)));
  return top;
}

LevelResult derive_level(int k, double delta, std::size_t n_cap, std::size_t N,
                         double alpha, double beta) {
  if (k < 2 || !(delta > 0.0 && delta < 0.5) || n_cap < 1 || N < n_cap ||
      !(beta > 0.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "derive_level requires k >= 2, delta in (0, 1/2), "
                "N >= n_cap >= 1 and beta > 0");
  }
  LevelParams p;
  p.k = k;
  p.delta = delta;
  p.n_cap = n_cap;
  p.N = N;
  p.alpha = alpha;
  p.beta = beta;

  const double n = static_cast<double>(n_cap);
  const double box_slack = 1.0 + level_slack(k, delta);
  const double fill = level_slack(k - 1, delta) / box_slack;

  const double n_prime = std::floor(fill * std::pow(n, omega_ratio(k - 1, k)));
  if (n_prime < 1.0) return Degenerate{"n' < 1"};
  p.n_prime = static_cast<std::size_t>(n_prime);

  p.w = static_cast<std::size_t>(
      std::floor(box_slack * static_cast<double>(p.n_prime)));
  if (p.w > N) return Degenerate{"w > N"};

  p.ell = N / p.w;
  if (p.ell < 1) return Degenerate{"ell < 1"};

  const double b = std::floor(std::pow(n, omega_ratio(k - 4, k)));
  if (b < 1.0) return Degenerate{"b < 1"};
  p.b = static_cast<std::size_t>(b);

  // Largest integer c with c * (1 + 2^(k-3) delta) <= ell, evaluated with the
  // same product the audit uses.
  const double route_slack = 1.0 + level_slack(k - 3, delta);
  const double ell = static_cast<double>(p.ell);
  auto cap = static_cast<std::size_t>(std::floor(ell / route_slack));
  while (cap > 0 && static_cast<double>(cap) * route_slack > ell) --cap;
  if (cap < 1) return Degenerate{"box sorter capacity < 1"};
  p.box_capacity = cap;
  return p;
}

}  // namespace sortbench

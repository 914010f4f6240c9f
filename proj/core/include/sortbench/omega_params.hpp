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

// Recursion schedule and parameter derivation for the recursive online
// sorter. Everything here is a pure function of its arguments.

#include <cstddef>
#include <string>
#include <variant>

namespace sortbench {

// omega(200) needs ~94 bits, so the sequence is kept in 128-bit integers.
__extension__ typedef unsigned __int128 OmegaValue;

/// Largest index for which omega() is representable without overflow.
inline constexpr int kMaxOmegaIndex = 256;

/// omega(i) = 2 for i <= 1, omega(i) = omega(i-1) + omega(i-4) otherwise.
/// Backed by a table built once on first use; safe to call concurrently.
/// Throws Error(kInvalidParams) for i > kMaxOmegaIndex.
OmegaValue omega(int i);

/// omega(num) / omega(den) evaluated in double precision.
double omega_ratio(int num, int den);

/// The real root of x^4 = x^3 + 1 lying in [1, 2], found by bisection to
/// 1e-12. omega(i+1)/omega(i) converges to it.
double growth_root();

/// 2^j * delta, the slack unit scaled for recursion level j.
double level_slack(int j, double delta);

struct TopLevelConfig {
  std::size_t n = 0;
  double epsilon = 0.0;
  int k = 0;
  double delta = 0.0;
  std::size_t N = 0;  // floor((1 + epsilon) * n) array cells
};

/// Picks the recursion depth k = max(0, floor(log_1.38(log2 n))) and the
/// slack unit delta = epsilon / 2^(k+1). k is raised until delta < 1/2.
/// Throws kInvalidEpsilon unless epsilon in (0, 3], kInvalidN if n < 2.
TopLevelConfig derive_top(std::size_t n, double epsilon);

/// Derived quantities for one Sorter_k instance.
struct LevelParams {
  int k = 0;
  double delta = 0.0;
  std::size_t n_cap = 0;   // max elements accepted by the instance
  std::size_t N = 0;       // cells owned by the instance
  std::size_t n_prime = 0; // per-box capacity
  std::size_t w = 0;       // box width
  std::size_t ell = 0;     // number of boxes
  std::size_t b = 0;       // number of value subintervals
  std::size_t box_capacity = 0;  // floor(ell / (1 + 2^(k-3) delta))
  double alpha = 0.0;
  double beta = 1.0;

  double subinterval_width() const { return beta / static_cast<double>(b); }
};

/// Why derive_level declined to build a level; the caller falls back to the
/// baseline strategy.
struct Degenerate {
  std::string reason;
};

using LevelResult = std::variant<LevelParams, Degenerate>;

/// Computes n', w, ell, b for level k. Returns Degenerate when n' < 1,
/// b < 1, w > N, ell < 1 or the box-sorter capacity is < 1.
/// Throws kInvalidParams if k < 2, delta not in (0, 1/2), n_cap < 1,
/// N < n_cap or beta <= 0.
LevelResult derive_level(int k, double delta, std::size_t n_cap, std::size_t N,
                         double alpha, double beta);

}  // namespace sortbench

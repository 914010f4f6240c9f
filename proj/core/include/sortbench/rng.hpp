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

#include <cstdint>
#include <random>

namespace sortbench {

/// Seeded deterministic generator shared by workloads and randomized
/// strategies: std::mt19937_64 (a twisted GFSR whose output sequence is fixed
/// by the C++ standard) seeded through std::seed_seq with the 32-bit halves
/// of (seed, stream). The conversions below avoid std distributions, whose
/// output is implementation-defined, so streams match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Stream ids keep workload values and strategy choices uncorrelated when
// they share a seed.
inline constexpr std::uint64_t kWorkloadStream = 1;
inline constexpr std::uint64_t kStrategyStream = 2;

}  // namespace sortbench

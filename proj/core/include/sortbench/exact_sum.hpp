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

#include <vector>

namespace sortbench {

/// Correctly rounded sum of doubles (Shewchuk's non-overlapping partials with
/// the half-even fix-up used by Python's math.fsum). The result does not
/// depend on the order of additions.
class ExactSum {
 public:
  void add(double x);
  /// Adds |a - b| without first rounding the difference.
  void add_distance(double a, double b);
  double value() const;

 private:
  std::vector<double> partials_;
};

}  // namespace sortbench

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

#include <ostream>
#include <span>
#include <string>

#include "sortbench/experiment.hpp"

namespace sortbench {

/// Column order of the CSV header and of the JSON object keys.
inline constexpr const char* kRowColumns[] = {
    "strategy", "workload", "n",          "epsilon", "seed",
    "array_size", "cost",   "opt",        "ratio",   "runtime_ms",
    "k",        "delta",    "max_recursion_depth",   "audit_pass"};

/// Shortest decimal that parses back to the same double; "inf"/"nan" for
/// non-finite values.
std::string format_double(double value);

std::string to_csv(std::span<const ExperimentRow> rows);
/// Array of objects; +infinity ratios become null.
std::string to_json(std::span<const ExperimentRow> rows);

void write_rows(std::span<const ExperimentRow> rows, OutputFormat format,
                std::ostream& out);

/// Writes to `path`, or stdout when it is empty. Throws kIo naming the path.
void emit(std::span<const ExperimentRow> rows, OutputFormat format,
          const std::string& path);

}  // namespace sortbench

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

#include "sortbench/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "sortbench/error.hpp"

namespace sortbench {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string to_csv(std::span<const ExperimentRow> rows) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kRowColumns); ++i) {
    if (i > 0) out += ',';
    out += kRowColumns[i];
  }
  out += '\n';
  for (const ExperimentRow& r : rows) {
    out += r.strategy + ',' + r.workload + ',' + std::to_string(r.n) + ',' +
           format_double(r.epsilon) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.array_size) + ',' + format_double(r.cost) + ',' +
           format_double(r.opt) + ',' + format_double(r.ratio) + ',' +
           format_double(r.runtime_ms) + ',' + std::to_string(r.k) + ',' +
           format_double(r.delta) + ',' +
           std::to_string(r.max_recursion_depth) + ',' +
           (r.audit_pass ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_json(std::span<const ExperimentRow> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ExperimentRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["strategy"] = r.strategy;
    obj["workload"] = r.workload;
    obj["n"] = r.n;
    obj["epsilon"] = r.epsilon;
    obj["seed"] = r.seed;
    obj["array_size"] = r.array_size;
    obj["cost"] = r.cost;
    obj["opt"] = r.opt;
    obj["ratio"] = r.ratio;  // nlohmann writes non-finite numbers as null
    obj["runtime_ms"] = r.runtime_ms;
    obj["k"] = r.k;
    obj["delta"] = r.delta;
    obj["max_recursion_depth"] = r.max_recursion_depth;
    obj["audit_pass"] = r.audit_pass;
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + '\n';
}

void write_rows(std::span<const ExperimentRow> rows, OutputFormat format,
                std::ostream& out) {
  out << (format == OutputFormat::kCsv ? to_csv(rows) : to_json(rows));
}

void emit(std::span<const ExperimentRow> rows, OutputFormat format,
          const std::string& path) {
  if (path.empty()) {
    write_rows(rows, format, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path);
  write_rows(rows, format, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace sortbench

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

#include "sortbench/error.hpp"

namespace sortbench {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kValueOutOfInterval: return "ValueOutOfInterval";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      detail_(what) {}

Error::Error(ErrorCode code, const std::string& what, std::size_t step)
    : std::runtime_error(std::string(to_string(code)) + " at step " +
                         std::to_string(step) + ": " + what),
      code_(code),
      detail_(what),
      step_(step) {}

}  // namespace sortbench

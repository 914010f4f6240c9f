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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sortbench {

enum class ErrorCode {
  kInvalidEpsilon,
  kInvalidN,
  kInvalidParams,
  kValueOutOfInterval,
  kCapacityExceeded,
  kTooLarge,
  kInvalidSpec,
  kInvalidConfig,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `step()` is set when the
/// error surfaced while feeding a stream, and names the 0-based input index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  Error(ErrorCode code, const std::string& what, std::size_t step);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> step() const noexcept { return step_; }
  /// The message without the code/step prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> step_;
};

}  // namespace sortbench

// Copyright 2026 The lwhbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LWHB_ERROR_H_
#define LWHB_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lwhb {

enum class ErrorCode {
  kInvalidArgument,
  kNotImplemented,
  kStateError,
  kParseError,
  kDegenerateInput,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line()` is nonzero only for parse
// errors that can be pinned to a 1-based input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

[[noreturn]] void ThrowInvalidArgument(const std::string& message);
[[noreturn]] void ThrowNotImplemented(const std::string& message);
[[noreturn]] void ThrowStateError(const std::string& message);
[[noreturn]] void ThrowParseError(const std::string& message, std::size_t line = 0);

}  // namespace lwhb

#endif  // LWHB_ERROR_H_

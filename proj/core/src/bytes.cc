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

#include "lwhb/bytes.h"

#include "lwhb/error.h"

namespace lwhb {

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kNotImplemented:
      return "not-implemented";
    case ErrorCode::kStateError:
      return "state-error";
    case ErrorCode::kParseError:
      return "parse-error";
    case ErrorCode::kDegenerateInput:
      return "degenerate-input";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(message), code_(code), line_(line) {}

void ThrowInvalidArgument(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

void ThrowNotImplemented(const std::string& message) {
  throw Error(ErrorCode::kNotImplemented, message);
}

void ThrowStateError(const std::string& message) {
  throw Error(ErrorCode::kStateError, message);
}

void ThrowParseError(const std::string& message, std::size_t line) {
  if (line == 0) throw Error(ErrorCode::kParseError, message);
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message, line);
}

std::string ToHex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes FromHex(std::string_view hex) {
  while (!hex.empty() && IsSpace(hex.front())) hex.remove_prefix(1);
  while (!hex.empty() && IsSpace(hex.back())) hex.remove_suffix(1);
  if (hex.size() % 2 != 0) ThrowInvalidArgument("odd-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = HexValue(hex[i]);
    const int lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      ThrowInvalidArgument("invalid hex character near offset " +
                           std::to_string(i));
    }
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

}  // namespace lwhb

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

// Known-answer test files in the LWC hash format:
//
//   Count = 1
//   Msg =
//   MD = 7346BC14...
//
// with records separated by blank lines.

#ifndef LWHB_HASHKIT_KAT_H_
#define LWHB_HASHKIT_KAT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lwhb/bytes.h"

namespace lwhb::hashkit {

struct KatVector {
  std::uint64_t count;
  Bytes msg;
  Bytes md;
  // 1-based line of the "Count" entry in the source file.
  std::size_t line;
};

// Throws kParseError (with line number) for malformed records and for
// files containing no vectors.
std::vector<KatVector> ParseKatFile(std::string_view text);

struct KatFailure {
  std::uint64_t count;
  std::string expected_hex;
  std::string actual_hex;
};

struct KatOutcome {
  std::size_t total = 0;
  std::vector<KatFailure> failures;

  bool ok() const { return total > 0 && failures.empty(); }
};

// Hashes every vector's message with spec_id and compares against MD.
KatOutcome RunKat(std::string_view spec_id, const std::vector<KatVector>& vectors);

}  // namespace lwhb::hashkit

#endif  // LWHB_HASHKIT_KAT_H_

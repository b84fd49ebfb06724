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

#include "lwhb/hashkit/kat.h"

#include <charconv>
#include <optional>

#include "lwhb/error.h"
#include "lwhb/hashkit/hasher.h"

namespace lwhb::hashkit {

namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Pending {
  std::optional<std::uint64_t> count;
  std::optional<Bytes> msg;
  std::optional<Bytes> md;
  std::size_t line = 0;
};

void Flush(Pending& p, std::vector<KatVector>& out, std::size_t line) {
  if (!p.count && !p.msg && !p.md) return;
  if (!p.count || !p.msg || !p.md) {
    ThrowParseError("incomplete record (needs Count, Msg and MD)",
                    p.line != 0 ? p.line : line);
  }
  out.push_back({*p.count, std::move(*p.msg), std::move(*p.md), p.line});
  p = Pending{};
}

}  // namespace

std::vector<KatVector> ParseKatFile(std::string_view text) {
  std::vector<KatVector> vectors;
  Pending pending;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty()) {
      Flush(pending, vectors, line_no);
      continue;
    }
    if (line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      ThrowParseError("expected 'key = value'", line_no);
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    try {
      if (key == "Count") {
        if (pending.count) Flush(pending, vectors, line_no);
        std::uint64_t n = 0;
        const auto [ptr, ec] =
            std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
          ThrowParseError("bad Count value '" + std::string(value) + "'",
                          line_no);
        }
        pending.count = n;
        pending.line = line_no;
      } else if (key == "Msg") {
        pending.msg = FromHex(value);
      } else if (key == "MD") {
        pending.md = FromHex(value);
      } else {
        ThrowParseError("unknown key '" + std::string(key) + "'", line_no);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParseError) throw;
      ThrowParseError(e.what(), line_no);
    }
  }
  Flush(pending, vectors, line_no);
  if (vectors.empty()) ThrowParseError("no known-answer vectors found");
  return vectors;
}

KatOutcome RunKat(std::string_view spec_id,
                  const std::vector<KatVector>& vectors) {
  KatOutcome outcome;
  for (const KatVector& v : vectors) {
    ++outcome.total;
    const Digest d = Hash(spec_id, v.msg);
    if (d.bytes != v.md) {
      outcome.failures.push_back({v.count, ToHex(v.md), d.hex()});
    }
  }
  return outcome;
}

}  // namespace lwhb::hashkit

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

#include <array>
#include <string>

#include "lwhb/error.h"
#include "lwhb/memfoot/memfoot.h"
#include "memfoot/text_util.h"

namespace lwhb::memfoot {

namespace {

using internal::ParseSize;
using internal::SplitLines;
using internal::Tokens;
using internal::Trim;

enum Family { kData, kBss, kText, kRodata, kFamilies };

constexpr std::array<std::string_view, kFamilies> kFamilyNames = {
    ".data", ".bss", ".text", ".rodata"};

// ".text" and ".text.foo" belong to .text; ".textual" does not.
int FamilyOf(std::string_view name) {
  for (int f = 0; f < kFamilies; ++f) {
    const std::string_view base = kFamilyNames[f];
    if (name.substr(0, base.size()) != base) continue;
    if (name.size() == base.size() || name[base.size()] == '.') return f;
  }
  return -1;
}

std::uint64_t RequireSize(std::string_view token, std::string_view what,
                          std::size_t line_no) {
  const auto value = ParseSize(token);
  if (!value) {
    ThrowParseError("malformed " + std::string(what) + " field '" +
                        std::string(token) + "'",
                    line_no);
  }
  return *value;
}

}  // namespace

MapSegments ParseMap(std::string_view map_text) {
  const std::vector<std::string_view> lines = SplitLines(map_text);
  std::size_t first = 0;
  bool any_content = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view t = Trim(lines[i]);
    if (!t.empty()) any_content = true;
    if (t == "Linker script and memory map") first = i + 1;
  }
  if (!any_content) ThrowParseError("empty map file");

  // [family][0] = output-section records, [family][1] = input sections.
  std::uint64_t totals[kFamilies][2] = {};
  bool has_output[kFamilies] = {};

  for (std::size_t i = first; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::vector<std::string_view> toks = Tokens(line);
    if (toks.empty() || toks[0].front() != '.') continue;
    const int family = FamilyOf(toks[0]);
    if (family < 0) continue;
    const bool output_section = !internal::IsBlank(line.front());
    const std::size_t line_no = i + 1;

    std::uint64_t size = 0;
    if (toks.size() == 1) {
      // Long names are wrapped: address and size follow on the next line.
      // A bare name without such a line is an empty output section.
      if (i + 1 < lines.size()) {
        const std::vector<std::string_view> next = Tokens(lines[i + 1]);
        if (!next.empty() && next[0].substr(0, 2) == "0x") {
          if (next.size() < 2) ThrowParseError("missing size field", i + 2);
          size = RequireSize(next[1], "size", i + 2);
          ++i;
        }
      }
    } else {
      RequireSize(toks[1], "address", line_no);
      if (toks.size() < 3) ThrowParseError("missing size field", line_no);
      size = RequireSize(toks[2], "size", line_no);
    }
    totals[family][output_section ? 0 : 1] += size;
    if (output_section) has_output[family] = true;
  }

  const auto pick = [&](int f) {
    return has_output[f] ? totals[f][0] : totals[f][1];
  };
  MapSegments seg;
  seg.data_bytes = pick(kData);
  seg.bss_bytes = pick(kBss);
  seg.text_bytes = pick(kText);
  seg.rodata_bytes = pick(kRodata);
  return seg;
}

}  // namespace lwhb::memfoot

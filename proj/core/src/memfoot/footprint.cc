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

#include <string>

#include "lwhb/error.h"
#include "lwhb/memfoot/memfoot.h"
#include "memfoot/text_util.h"

namespace lwhb::memfoot {

MemoryFootprint Footprint(const MapSegments& map, const StackUsage& su) {
  MemoryFootprint fp;
  fp.segments = map;
  fp.stack_bytes = su.worst_case_bytes;
  fp.stack_policy = std::string(StackPolicyName(su.policy));
  fp.ram_bytes = map.data_bytes + map.bss_bytes + su.worst_case_bytes;
  fp.rom_bytes = map.text_bytes + map.rodata_bytes;
  return fp;
}

MemoryFootprint ExternalFootprint(std::uint64_t ram_bytes,
                                  std::uint64_t rom_bytes) {
  MemoryFootprint fp;
  fp.ram_bytes = ram_bytes;
  fp.rom_bytes = rom_bytes;
  fp.stack_policy = "external";
  return fp;
}

namespace {

constexpr std::string_view kHeader =
    "spec_id,ram_bytes,rom_bytes,data,bss,stack,text,rodata";

}  // namespace

std::string FormatFootprintCsv(std::span<const FootprintRow> rows) {
  std::string out = std::string(kHeader) + "\n";
  for (const FootprintRow& r : rows) {
    const MemoryFootprint& f = r.footprint;
    out += r.spec_id;
    for (std::uint64_t v :
         {f.ram_bytes, f.rom_bytes, f.segments.data_bytes, f.segments.bss_bytes,
          f.stack_bytes, f.segments.text_bytes, f.segments.rodata_bytes}) {
      out += "," + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

std::vector<FootprintRow> ParseFootprintCsv(std::string_view csv) {
  const std::vector<std::string_view> lines = internal::SplitLines(csv);
  if (lines.empty() || internal::Trim(lines[0]) != kHeader) {
    ThrowParseError("expected header '" + std::string(kHeader) + "'", 1);
  }
  std::vector<FootprintRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t c; (c = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, c));
      rest.remove_prefix(c + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 8 || fields[0].empty()) {
      ThrowParseError("expected 8 fields", i + 1);
    }
    std::uint64_t v[7];
    for (int k = 0; k < 7; ++k) {
      const std::string_view field = fields[k + 1];
      const auto parsed = field.substr(0, 2) == "0x"
                              ? std::nullopt
                              : internal::ParseSize(field);
      if (!parsed) {
        ThrowParseError("malformed integer '" + std::string(field) + "'",
                        i + 1);
      }
      v[k] = *parsed;
    }
    FootprintRow row;
    row.spec_id = std::string(fields[0]);
    row.footprint.ram_bytes = v[0];
    row.footprint.rom_bytes = v[1];
    row.footprint.segments = {v[2], v[3], v[5], v[6]};
    row.footprint.stack_bytes = v[4];
    row.footprint.stack_policy = "csv";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lwhb::memfoot

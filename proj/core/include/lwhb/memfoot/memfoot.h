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

// RAM/ROM footprint accounting from GNU toolchain artifacts:
//
//   RAM = .data + .bss + stack
//   ROM = .text + .rodata
//
// Section sizes come from a linker map file, stack sizes from the per-
// function .su files written by -fstack-usage. Heap is not counted.

#ifndef LWHB_MEMFOOT_MEMFOOT_H_
#define LWHB_MEMFOOT_MEMFOOT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lwhb::memfoot {

inline constexpr std::string_view kParserVersion = "1";

struct MapSegments {
  std::uint64_t data_bytes = 0;
  std::uint64_t bss_bytes = 0;
  std::uint64_t text_bytes = 0;
  std::uint64_t rodata_bytes = 0;

  friend bool operator==(const MapSegments&, const MapSegments&) = default;
};

// Sums the .data*, .bss*, .text* and .rodata* section records of a GNU ld
// map. When the file has a "Linker script and memory map" part, only that
// part is read (discarded input sections are skipped). Per section family,
// output-section records (starting in column 0) are used when present;
// otherwise the indented input-section records are summed. Sizes are hex
// with a 0x prefix, decimal otherwise.
//
// Throws kParseError (with line number) for a malformed size field and for
// an empty file.
MapSegments ParseMap(std::string_view map_text);

enum class StackQualifier { kStatic, kDynamic, kBounded };

std::string_view StackQualifierName(StackQualifier q);

struct StackEntry {
  std::string location;  // file:line:col
  std::string function;
  std::uint64_t bytes = 0;
  StackQualifier qualifier = StackQualifier::kStatic;
};

enum class StackPolicy { kMaxFrame, kDeepestPath };

std::string_view StackPolicyName(StackPolicy p);

struct StackUsage {
  std::vector<StackEntry> entries;
  std::uint64_t worst_case_bytes = 0;
  StackPolicy policy = StackPolicy::kMaxFrame;
};

// A caller -> callee edge list, one "caller callee" pair per line. Blank
// lines and lines starting with '#' are ignored.
using CallGraph = std::vector<std::pair<std::string, std::string>>;

CallGraph ParseCallGraph(std::string_view text);

// Parses "file:line:col:function<TAB>bytes<TAB>qualifier" lines. The worst
// case is the largest single frame. For "dynamic,bounded" entries the byte
// column is the bound and is used as is.
//
// Throws kParseError for unknown qualifiers, malformed lines and empty
// input.
StackUsage ParseSu(std::string_view su_text);

// As above, but the worst case is the largest frame sum along any call
// path. Functions absent from the .su data contribute 0 bytes; when a name
// occurs in several files, its largest frame is used. Throws
// kInvalidArgument if the graph is recursive.
StackUsage ParseSu(std::string_view su_text, const CallGraph& graph);

struct MemoryFootprint {
  std::uint64_t ram_bytes = 0;
  std::uint64_t rom_bytes = 0;
  MapSegments segments;
  std::uint64_t stack_bytes = 0;
  std::string stack_policy;  // "max-frame", "deepest-path" or "external"
  std::vector<std::string> sources;
  std::string parser_version = std::string(kParserVersion);
};

MemoryFootprint Footprint(const MapSegments& map, const StackUsage& su);

// A footprint measured elsewhere and taken as given.
MemoryFootprint ExternalFootprint(std::uint64_t ram_bytes,
                                  std::uint64_t rom_bytes);

struct FootprintRow {
  std::string spec_id;
  MemoryFootprint footprint;
};

// spec_id,ram_bytes,rom_bytes,data,bss,stack,text,rodata
std::string FormatFootprintCsv(std::span<const FootprintRow> rows);

// Inverse of FormatFootprintCsv; throws kParseError on malformed rows.
std::vector<FootprintRow> ParseFootprintCsv(std::string_view csv);

}  // namespace lwhb::memfoot

#endif  // LWHB_MEMFOOT_MEMFOOT_H_

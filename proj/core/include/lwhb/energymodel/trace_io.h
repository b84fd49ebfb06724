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

// Power trace files.
//
// Text: one decimal sample per line; blank lines and '#' comments ignored.
// Binary: the 8-byte magic "LWHTRC01" followed by little-endian IEEE-754
// float32 samples.

#ifndef LWHB_ENERGYMODEL_TRACE_IO_H_
#define LWHB_ENERGYMODEL_TRACE_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwhb/bytes.h"

namespace lwhb::energymodel {

inline constexpr std::string_view kTraceMagic = "LWHTRC01";

// Detects the format from the magic header. Throws kParseError for
// malformed content, out-of-range samples and traces without samples.
std::vector<double> ParseTrace(ByteView contents);

std::vector<double> ParseTraceText(std::string_view text);
std::vector<double> ParseTraceBinary(ByteView contents);

Bytes EncodeTraceBinary(std::span<const float> samples);
std::string EncodeTraceText(std::span<const double> samples);

// Reads and parses a trace file; kInvalidArgument if it cannot be opened.
std::vector<double> LoadTraceFile(const std::string& path);

}  // namespace lwhb::energymodel

#endif  // LWHB_ENERGYMODEL_TRACE_IO_H_

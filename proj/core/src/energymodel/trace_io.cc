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

#include "lwhb/energymodel/trace_io.h"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lwhb/energymodel/energy.h"
#include "lwhb/error.h"
#include "lwhb/format.h"

namespace lwhb::energymodel {

namespace {

bool InRange(double s) { return s >= kMinSample && s <= kMaxSample; }

std::string RangeMessage(double s) {
  return "sample " + FormatNumber(s) +
         " outside the normalized range [-0.5, 0.5]";
}

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

std::vector<double> ParseTraceText(std::string_view text) {
  std::vector<double> samples;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    // strtod needs a terminated buffer; std::from_chars for double is not
    // available on every supported standard library.
    const std::string token(line);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      ThrowParseError("malformed sample '" + token + "'", line_no);
    }
    if (!InRange(value)) ThrowParseError(RangeMessage(value), line_no);
    samples.push_back(value);
  }
  if (samples.empty()) ThrowParseError("trace has no samples");
  return samples;
}

std::vector<double> ParseTraceBinary(ByteView contents) {
  if (contents.size() < kTraceMagic.size() ||
      std::memcmp(contents.data(), kTraceMagic.data(), kTraceMagic.size()) !=
          0) {
    ThrowParseError("missing LWHTRC01 header");
  }
  contents = contents.subspan(kTraceMagic.size());
  if (contents.size() % 4 != 0) {
    ThrowParseError("binary trace payload is not a whole number of float32");
  }
  std::vector<double> samples;
  samples.reserve(contents.size() / 4);
  for (std::size_t i = 0; i < contents.size(); i += 4) {
    const std::uint32_t bits = static_cast<std::uint32_t>(contents[i]) |
                               static_cast<std::uint32_t>(contents[i + 1]) << 8 |
                               static_cast<std::uint32_t>(contents[i + 2]) << 16 |
                               static_cast<std::uint32_t>(contents[i + 3]) << 24;
    const double value = std::bit_cast<float>(bits);
    if (!InRange(value)) {
      ThrowParseError(RangeMessage(value) + " at sample index " +
                      std::to_string(i / 4));
    }
    samples.push_back(value);
  }
  if (samples.empty()) ThrowParseError("trace has no samples");
  return samples;
}

std::vector<double> ParseTrace(ByteView contents) {
  if (contents.size() >= kTraceMagic.size() &&
      std::memcmp(contents.data(), kTraceMagic.data(), kTraceMagic.size()) ==
          0) {
    return ParseTraceBinary(contents);
  }
  return ParseTraceText(std::string_view(
      reinterpret_cast<const char*>(contents.data()), contents.size()));
}

Bytes EncodeTraceBinary(std::span<const float> samples) {
  Bytes out(kTraceMagic.begin(), kTraceMagic.end());
  out.reserve(out.size() + 4 * samples.size());
  for (float s : samples) {
    const auto bits = std::bit_cast<std::uint32_t>(s);
    for (int k = 0; k < 4; ++k) {
      out.push_back(static_cast<std::uint8_t>(bits >> (8 * k)));
    }
  }
  return out;
}

std::string EncodeTraceText(std::span<const double> samples) {
  std::string out;
  char buf[40];
  for (double s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g\n", s);
    out += buf;
  }
  return out;
}

std::vector<double> LoadTraceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInvalidArgument("cannot open trace file '" + path + "'");
  const Bytes contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  return ParseTrace(contents);
}

}  // namespace lwhb::energymodel

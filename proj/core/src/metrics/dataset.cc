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

#include "lwhb/metrics/dataset.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>

#include "lwhb/error.h"
#include "lwhb/format.h"
#include "table2_embedded.h"

namespace lwhb::metrics {

namespace {

constexpr std::string_view kBaseHeader = "spec_id,cpb,ram,rom,energy_nj";

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  for (std::size_t c; (c = line.find(',')) != std::string_view::npos;) {
    fields.push_back(Trim(line.substr(0, c)));
    line.remove_prefix(c + 1);
  }
  fields.push_back(Trim(line));
  return fields;
}

double ParseNumber(std::string_view field, std::size_t line_no) {
  const std::string token(field);
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() ||
      !std::isfinite(v)) {
    ThrowParseError("malformed number '" + token + "'", line_no);
  }
  return v;
}

}  // namespace

std::vector<MeasurementRecord> ParseMeasurementCsv(std::string_view csv,
                                                   RecordSource source) {
  std::vector<MeasurementRecord> records;
  std::set<std::string, std::less<>> seen;
  bool header_seen = false;
  bool has_erank = false;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const std::size_t eol = csv.find('\n');
    const std::string_view line = Trim(csv.substr(0, eol));
    csv = eol == std::string_view::npos ? std::string_view{}
                                        : csv.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line == kBaseHeader) {
        has_erank = false;
      } else if (line == std::string(kBaseHeader) + ",erank") {
        has_erank = true;
      } else {
        ThrowParseError("expected header '" + std::string(kBaseHeader) +
                            "[,erank]'",
                        line_no);
      }
      header_seen = true;
      continue;
    }
    const std::vector<std::string_view> f = SplitCsv(line);
    if (f.size() != (has_erank ? 6u : 5u)) {
      ThrowParseError("wrong number of fields", line_no);
    }
    if (f[0].empty()) ThrowParseError("empty spec_id", line_no);
    if (!seen.insert(std::string(f[0])).second) {
      ThrowParseError("duplicate spec_id '" + std::string(f[0]) + "'",
                      line_no);
    }
    MeasurementRecord r;
    r.spec_id = std::string(f[0]);
    r.cpb = ParseNumber(f[1], line_no);
    r.ram_bytes = ParseNumber(f[2], line_no);
    r.rom_bytes = ParseNumber(f[3], line_no);
    r.energy_nj = ParseNumber(f[4], line_no);
    if (has_erank && !f[5].empty()) r.published_erank = ParseNumber(f[5], line_no);
    r.source = source;
    records.push_back(std::move(r));
  }
  if (!header_seen) ThrowParseError("empty measurement file");
  return records;
}

std::string FormatMeasurementCsv(std::span<const MeasurementRecord> records) {
  std::string out = std::string(kBaseHeader) + "\n";
  for (const MeasurementRecord& r : records) {
    out += r.spec_id + "," + FormatNumber(r.cpb) + "," +
           FormatNumber(r.ram_bytes) + "," + FormatNumber(r.rom_bytes) + "," +
           FormatNumber(r.energy_nj) + "\n";
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowInvalidArgument("cannot open '" + path + "'");
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

std::vector<MeasurementRecord> EmbeddedPaperDataset() {
  return ParseMeasurementCsv(internal::kEmbeddedTable2Csv,
                             RecordSource::kPaperTable2);
}

std::vector<MeasurementRecord> PaperDataset() {
  if (const char* path = std::getenv(kDatasetEnvVar);
      path != nullptr && *path != '\0') {
    return ParseMeasurementCsv(ReadTextFile(path), RecordSource::kPaperTable2);
  }
  return EmbeddedPaperDataset();
}

}  // namespace lwhb::metrics

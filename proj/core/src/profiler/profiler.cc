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

#include "lwhb/profiler/profiler.h"

#include <algorithm>
#include <cmath>

#include "lwhb/bytes.h"
#include "lwhb/error.h"
#include "lwhb/format.h"
#include "lwhb/hashkit/hasher.h"

namespace lwhb::profiler {

namespace {

Bytes BenchMessage(std::size_t len) {
  // Fixed xorshift stream so every run hashes the same bytes.
  Bytes msg(len);
  std::uint32_t x = 0x9e3779b9U;
  for (auto& b : msg) {
    x ^= x << 13;
    x ^= x >> 17;
    x ^= x << 5;
    b = static_cast<std::uint8_t>(x);
  }
  return msg;
}

}  // namespace

double Median(std::span<const double> values) {
  if (values.empty()) ThrowInvalidArgument("median of an empty sequence");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

CpbResult MeasureCpb(std::string_view spec_id, std::size_t message_len_bytes,
                     std::size_t repetitions, CycleSource& source) {
  if (message_len_bytes == 0) {
    ThrowInvalidArgument("message length must be at least 1 byte");
  }
  if (repetitions == 0) {
    ThrowInvalidArgument("repetitions must be at least 1");
  }
  hashkit::RequireImplemented(spec_id);

  const Bytes message = BenchMessage(message_len_bytes);
  volatile std::uint8_t sink = hashkit::Hash(spec_id, message).bytes[0];

  CpbResult result;
  result.spec_id = std::string(spec_id);
  result.message_len_bytes = message_len_bytes;
  result.repetitions = repetitions;
  result.source = std::string(CycleSourceKindName(source.kind()));
  result.cycles_per_rep.reserve(repetitions);
  for (std::size_t i = 0; i < repetitions; ++i) {
    source.Begin();
    const hashkit::Digest digest = hashkit::Hash(spec_id, message);
    const std::uint64_t cycles = source.End();
    sink = sink ^ digest.bytes[0];
    result.cycles_per_rep.push_back(cycles);
  }
  (void)sink;

  const double len = static_cast<double>(message_len_bytes);
  std::vector<double> cpb;
  cpb.reserve(repetitions);
  for (std::uint64_t c : result.cycles_per_rep) {
    cpb.push_back(static_cast<double>(c) / len);
  }
  result.cpb_median = Median(cpb);
  for (double& v : cpb) v = std::abs(v - result.cpb_median);
  result.cpb_mad = Median(cpb);
  return result;
}

ExternalCpb IngestExternalCpb(std::string_view spec_id, double cpb_value) {
  if (!(cpb_value > 0.0) || !std::isfinite(cpb_value)) {
    ThrowInvalidArgument("cycles per byte must be positive, got " +
                         FormatNumber(cpb_value));
  }
  if (spec_id.empty()) ThrowInvalidArgument("empty spec id");
  return ExternalCpb{std::string(spec_id), cpb_value};
}

std::string FormatBenchCsv(std::span<const CpbResult> results) {
  std::string out = "spec_id,message_len,repetitions,cpb_median,cpb_mad,source\n";
  for (const CpbResult& r : results) {
    out += r.spec_id + "," + std::to_string(r.message_len_bytes) + "," +
           std::to_string(r.repetitions) + "," + FormatNumber(r.cpb_median) +
           "," + FormatNumber(r.cpb_mad) + "," + r.source + "\n";
  }
  return out;
}

}  // namespace lwhb::profiler

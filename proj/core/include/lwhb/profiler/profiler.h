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

// Cycles-per-byte measurement of the implemented hash functions.

#ifndef LWHB_PROFILER_PROFILER_H_
#define LWHB_PROFILER_PROFILER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwhb/profiler/cycle_source.h"

namespace lwhb::profiler {

inline constexpr std::size_t kDefaultMessageLen = 128;
inline constexpr std::size_t kDefaultRepetitions = 32;

struct CpbResult {
  std::string spec_id;
  std::size_t message_len_bytes = 0;
  std::size_t repetitions = 0;
  std::vector<std::uint64_t> cycles_per_rep;
  double cpb_median = 0.0;
  // Median absolute deviation, in cycles per byte.
  double cpb_mad = 0.0;
  std::string source;
};

// Hashes a fixed pseudo-random message of message_len_bytes once untimed,
// then `repetitions` times between source.Begin() and source.End().
// Throws kInvalidArgument for a zero length or zero repetitions and
// kNotImplemented for specs without an implementation.
CpbResult MeasureCpb(std::string_view spec_id, std::size_t message_len_bytes,
                     std::size_t repetitions, CycleSource& source);

// A cycles-per-byte figure measured elsewhere (e.g. on the target board).
struct ExternalCpb {
  std::string spec_id;
  double cpb;
  std::string source = "external";
};

// Throws kInvalidArgument unless cpb_value is positive and finite.
ExternalCpb IngestExternalCpb(std::string_view spec_id, double cpb_value);

// Median of the values; the mean of the middle pair for even counts.
// Throws kInvalidArgument on empty input.
double Median(std::span<const double> values);

// Header plus one row per result:
// spec_id,message_len,repetitions,cpb_median,cpb_mad,source
std::string FormatBenchCsv(std::span<const CpbResult> results);

}  // namespace lwhb::profiler

#endif  // LWHB_PROFILER_PROFILER_H_

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

// Composite efficiency metrics and comparative normalization.
//
//   E-RANK = (1e9 / cpb) / ((rom + 2 * ram) * energy_nj)
//   FOM    = throughput / (clk * ge^2)
//
// E-RANK units are fixed: cycles per byte, bytes, bytes, nanojoules.

#ifndef LWHB_METRICS_METRICS_H_
#define LWHB_METRICS_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lwhb::metrics {

enum class RecordSource { kPaperTable2, kMeasured, kExternal };

std::string_view RecordSourceName(RecordSource source);

struct MeasurementRecord {
  std::string spec_id;
  double cpb = 0.0;
  double ram_bytes = 0.0;
  double rom_bytes = 0.0;
  double energy_nj = 0.0;
  RecordSource source = RecordSource::kMeasured;
  // E-RANK as published alongside the inputs, when the source carries one.
  std::optional<double> published_erank;
};

// Throws kInvalidArgument unless cpb and energy are positive, ram and rom
// nonnegative, and rom + 2 * ram positive.
double Erank(const MeasurementRecord& record);

// Throws kInvalidArgument unless all arguments are positive.
double Fom(double throughput, double clk, double ge);

// Result of a normalization. `degenerate` is set when every input was
// equal; all outputs are then 1.0 and callers should surface a warning.
struct Normalized {
  std::vector<double> values;
  bool degenerate = false;
};

// x -> 1 - (x - min) / (max - min): lower raw values score higher.
// Throws kInvalidArgument for fewer than two values or non-finite input.
Normalized NormalizeInvertedMinMax(std::span<const double> values);

// Two printed forms of the logarithmic normalization exist. kRatio,
// log(x / min) / log(max / min), is the default; kProduct evaluates the
// literal log(x * min) form rescaled onto [0, 1] and is kept for auditing.
// Both are the same map in exact arithmetic.
enum class LogForm { kRatio, kProduct };

// Order-preserving; min -> 0, max -> 1. Throws kInvalidArgument for fewer
// than two values or any nonpositive value.
Normalized NormalizeLogMinMax(std::span<const double> values,
                              LogForm form = LogForm::kRatio);

}  // namespace lwhb::metrics

#endif  // LWHB_METRICS_METRICS_H_

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

#include "lwhb/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lwhb/error.h"
#include "lwhb/format.h"

namespace lwhb::metrics {

namespace {

void RequirePositive(double v, std::string_view what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    ThrowInvalidArgument(std::string(what) + " must be positive, got " +
                         FormatNumber(v));
  }
}

void RequireNonnegative(double v, std::string_view what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    ThrowInvalidArgument(std::string(what) + " must not be negative, got " +
                         FormatNumber(v));
  }
}

void CheckNormalizationInput(std::span<const double> values) {
  if (values.size() < 2) {
    ThrowInvalidArgument("normalization needs at least two values");
  }
  for (double v : values) {
    if (!std::isfinite(v)) ThrowInvalidArgument("non-finite value");
  }
}

}  // namespace

std::string_view RecordSourceName(RecordSource source) {
  switch (source) {
    case RecordSource::kPaperTable2:
      return "paper";
    case RecordSource::kMeasured:
      return "measured";
    case RecordSource::kExternal:
      return "external";
  }
  return "?";
}

double Erank(const MeasurementRecord& r) {
  RequirePositive(r.cpb, r.spec_id + ": cpb");
  RequirePositive(r.energy_nj, r.spec_id + ": energy");
  RequireNonnegative(r.ram_bytes, r.spec_id + ": ram");
  RequireNonnegative(r.rom_bytes, r.spec_id + ": rom");
  const double memory = r.rom_bytes + 2.0 * r.ram_bytes;
  RequirePositive(memory, r.spec_id + ": rom + 2*ram");
  return (1e9 / r.cpb) / (memory * r.energy_nj);
}

double Fom(double throughput, double clk, double ge) {
  RequirePositive(throughput, "throughput");
  RequirePositive(clk, "clock");
  RequirePositive(ge, "gate equivalents");
  return throughput / (clk * ge * ge);
}

Normalized NormalizeInvertedMinMax(std::span<const double> values) {
  CheckNormalizationInput(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo, max = *hi;
  Normalized out;
  if (min == max) {
    out.values.assign(values.size(), 1.0);
    out.degenerate = true;
    return out;
  }
  out.values.reserve(values.size());
  for (double x : values) {
    out.values.push_back(std::clamp(1.0 - (x - min) / (max - min), 0.0, 1.0));
  }
  return out;
}

Normalized NormalizeLogMinMax(std::span<const double> values, LogForm form) {
  CheckNormalizationInput(values);
  for (double v : values) {
    if (!(v > 0.0)) {
      ThrowInvalidArgument("logarithmic normalization needs positive values, "
                           "got " + FormatNumber(v));
    }
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min = *lo, max = *hi;
  Normalized out;
  if (min == max) {
    out.values.assign(values.size(), 1.0);
    out.degenerate = true;
    return out;
  }
  out.values.reserve(values.size());
  for (double x : values) {
    double v;
    if (form == LogForm::kRatio) {
      v = std::log(x / min) / std::log(max / min);
    } else {
      const double base = std::log(min * min);
      v = (std::log(x * min) - base) / (std::log(max * min) - base);
    }
    out.values.push_back(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

}  // namespace lwhb::metrics

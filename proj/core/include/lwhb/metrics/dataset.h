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

// Measurement tables in CSV form: spec_id,cpb,ram,rom,energy_nj[,erank].

#ifndef LWHB_METRICS_DATASET_H_
#define LWHB_METRICS_DATASET_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwhb/metrics/metrics.h"

namespace lwhb::metrics {

// Environment variable naming a CSV file that replaces the built-in
// reference dataset.
inline constexpr const char* kDatasetEnvVar = "LWHBENCH_TABLE2";

// Throws kParseError (with line number) for a bad header, malformed numbers
// and duplicate ids.
std::vector<MeasurementRecord> ParseMeasurementCsv(std::string_view csv,
                                                   RecordSource source);

std::string FormatMeasurementCsv(std::span<const MeasurementRecord> records);

// The 24-function reference dataset (AVR measurements). Reads the file
// named by LWHBENCH_TABLE2 when set, otherwise the copy compiled into the
// library.
std::vector<MeasurementRecord> PaperDataset();

// The compiled-in copy, ignoring the environment.
std::vector<MeasurementRecord> EmbeddedPaperDataset();

std::string ReadTextFile(const std::string& path);

}  // namespace lwhb::metrics

#endif  // LWHB_METRICS_DATASET_H_

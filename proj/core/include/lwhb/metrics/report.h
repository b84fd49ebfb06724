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

// Per-function metric reports: raw values, E-RANK, normalized scores and
// rankings, rendered as CSV, JSON or an SVG heatmap.

#ifndef LWHB_METRICS_REPORT_H_
#define LWHB_METRICS_REPORT_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwhb/metrics/metrics.h"

namespace lwhb::metrics {

enum class Metric { kCpb, kRam, kRom, kEnergy, kErank };

// "cpb", "ram", "rom", "energy", "erank".
std::string_view MetricName(Metric m);
// Throws kInvalidArgument for unknown names.
Metric ParseMetric(std::string_view name);

inline constexpr Metric kAllMetrics[] = {Metric::kCpb, Metric::kRam,
                                         Metric::kRom, Metric::kEnergy,
                                         Metric::kErank};

// Cost metrics rank ascending, E-RANK descending.
constexpr bool HigherIsBetter(Metric m) { return m == Metric::kErank; }

double RawValue(const MeasurementRecord& record, Metric m);

struct ReportRow {
  MeasurementRecord record;
  double erank = 0.0;
  std::optional<double> fom;
  // Normalized score per metric in [0, 1], 1 = best.
  std::map<Metric, double> normalized;
};

struct MetricReport {
  std::vector<Metric> metrics;
  // Rows in input order.
  std::vector<ReportRow> rows;
  // Spec ids ordered best-first for each metric.
  std::map<Metric, std::vector<std::string>> ordering;
  // The metric the report is sorted by.
  Metric primary = Metric::kErank;
  std::vector<std::string> warnings;

  const std::vector<std::string>& primary_ordering() const {
    return ordering.at(primary);
  }
  const ReportRow& row(std::string_view spec_id) const;
};

struct ReportOptions {
  LogForm log_form = LogForm::kRatio;
  // Defaults to the first requested metric; must be one of them.
  std::optional<Metric> sort_by;
};

// Cost metrics are normalized with the inverted min-max map, E-RANK with
// the logarithmic one. Ties keep input order. Throws kInvalidArgument for
// an empty record list, an empty metric list or duplicate spec ids.
MetricReport BuildReport(std::span<const MeasurementRecord> records,
                         std::span<const Metric> metrics,
                         const ReportOptions& options = {});

// Rows follow the primary ordering. Columns: spec_id, the raw inputs,
// erank, then norm_<metric> for each requested metric.
std::string FormatReportCsv(const MetricReport& report);
std::string FormatReportJson(const MetricReport& report);
// Heatmap: one row per function (primary ordering), one column per metric,
// darker cells for higher normalized scores.
std::string FormatReportSvg(const MetricReport& report);

struct ComparisonRow {
  std::string spec_id;
  bool matched = false;
  // (measured - reference) / reference; empty when unmatched.
  std::optional<double> delta_cpb;
  std::optional<double> delta_ram;
  std::optional<double> delta_rom;
  std::optional<double> delta_energy;
  std::optional<double> delta_erank;
};

std::vector<ComparisonRow> CompareToReference(
    std::span<const MeasurementRecord> measured,
    std::span<const MeasurementRecord> reference);

// Against PaperDataset().
std::vector<ComparisonRow> CompareToPaper(
    std::span<const MeasurementRecord> measured);

std::string FormatComparisonCsv(std::span<const ComparisonRow> rows);

}  // namespace lwhb::metrics

#endif  // LWHB_METRICS_REPORT_H_

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

#include "lwhb/metrics/report.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "lwhb/error.h"
#include "lwhb/format.h"
#include "lwhb/metrics/dataset.h"

namespace lwhb::metrics {

namespace {

double Rounded(double v) { return std::stod(FormatNumber(v)); }

std::string OptionalNumber(const std::optional<double>& v) {
  return v ? FormatNumber(*v) : std::string();
}

}  // namespace

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kCpb:
      return "cpb";
    case Metric::kRam:
      return "ram";
    case Metric::kRom:
      return "rom";
    case Metric::kEnergy:
      return "energy";
    case Metric::kErank:
      return "erank";
  }
  return "?";
}

Metric ParseMetric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (MetricName(m) == name) return m;
  }
  ThrowInvalidArgument("unknown metric '" + std::string(name) +
                       "' (expected cpb, ram, rom, energy or erank)");
}

double RawValue(const MeasurementRecord& record, Metric m) {
  switch (m) {
    case Metric::kCpb:
      return record.cpb;
    case Metric::kRam:
      return record.ram_bytes;
    case Metric::kRom:
      return record.rom_bytes;
    case Metric::kEnergy:
      return record.energy_nj;
    case Metric::kErank:
      return Erank(record);
  }
  return 0.0;
}

const ReportRow& MetricReport::row(std::string_view spec_id) const {
  for (const ReportRow& r : rows) {
    if (r.record.spec_id == spec_id) return r;
  }
  ThrowInvalidArgument("no report row for '" + std::string(spec_id) + "'");
}

MetricReport BuildReport(std::span<const MeasurementRecord> records,
                         std::span<const Metric> metrics,
                         const ReportOptions& options) {
  if (records.empty()) ThrowInvalidArgument("no records to report");
  if (metrics.empty()) ThrowInvalidArgument("no metrics requested");

  MetricReport report;
  for (Metric m : metrics) {
    if (std::find(report.metrics.begin(), report.metrics.end(), m) ==
        report.metrics.end()) {
      report.metrics.push_back(m);
    }
  }
  report.primary = options.sort_by.value_or(report.metrics.front());
  if (std::find(report.metrics.begin(), report.metrics.end(),
                report.primary) == report.metrics.end()) {
    ThrowInvalidArgument("sort metric '" +
                         std::string(MetricName(report.primary)) +
                         "' is not among the reported metrics");
  }

  std::set<std::string, std::less<>> ids;
  for (const MeasurementRecord& r : records) {
    if (!ids.insert(r.spec_id).second) {
      ThrowInvalidArgument("duplicate spec_id '" + r.spec_id + "'");
    }
    ReportRow row;
    row.record = r;
    row.erank = Erank(r);
    report.rows.push_back(std::move(row));
  }

  const std::size_t n = report.rows.size();
  for (Metric m : report.metrics) {
    std::vector<double> raw;
    raw.reserve(n);
    for (const ReportRow& row : report.rows) {
      raw.push_back(m == Metric::kErank ? row.erank : RawValue(row.record, m));
    }

    Normalized norm;
    if (n == 1) {
      norm.values.assign(1, 1.0);
      norm.degenerate = true;
    } else if (m == Metric::kErank) {
      norm = NormalizeLogMinMax(raw, options.log_form);
    } else {
      norm = NormalizeInvertedMinMax(raw);
    }
    if (norm.degenerate) {
      report.warnings.push_back(std::string(MetricName(m)) +
                                ": all values equal, normalized to 1.0");
    }
    for (std::size_t i = 0; i < n; ++i) {
      report.rows[i].normalized[m] = norm.values[i];
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return HigherIsBetter(m) ? raw[a] > raw[b] : raw[a] < raw[b];
    });
    std::vector<std::string>& order = report.ordering[m];
    for (std::size_t i : idx) order.push_back(report.rows[i].record.spec_id);
  }
  return report;
}

std::string FormatReportCsv(const MetricReport& report) {
  std::string out = "rank,spec_id,cpb,ram,rom,energy_nj,erank,erank_published";
  for (Metric m : report.metrics) out += ",norm_" + std::string(MetricName(m));
  out += "\n";
  std::size_t rank = 0;
  for (const std::string& id : report.primary_ordering()) {
    const ReportRow& row = report.row(id);
    const MeasurementRecord& r = row.record;
    out += std::to_string(++rank) + "," + r.spec_id + "," +
           FormatNumber(r.cpb) + "," + FormatNumber(r.ram_bytes) + "," +
           FormatNumber(r.rom_bytes) + "," + FormatNumber(r.energy_nj) + "," +
           FormatNumber(row.erank) + "," + OptionalNumber(r.published_erank);
    for (Metric m : report.metrics) {
      out += "," + FormatNumber(row.normalized.at(m));
    }
    out += "\n";
  }
  return out;
}

std::string FormatReportJson(const MetricReport& report) {
  nlohmann::ordered_json j;
  j["primary"] = MetricName(report.primary);
  j["metrics"] = nlohmann::ordered_json::array();
  for (Metric m : report.metrics) j["metrics"].push_back(MetricName(m));
  j["rows"] = nlohmann::ordered_json::array();
  for (const std::string& id : report.primary_ordering()) {
    const ReportRow& row = report.row(id);
    const MeasurementRecord& r = row.record;
    nlohmann::ordered_json jr;
    jr["spec_id"] = r.spec_id;
    jr["source"] = RecordSourceName(r.source);
    jr["cpb"] = Rounded(r.cpb);
    jr["ram"] = Rounded(r.ram_bytes);
    jr["rom"] = Rounded(r.rom_bytes);
    jr["energy_nj"] = Rounded(r.energy_nj);
    jr["erank"] = Rounded(row.erank);
    if (r.published_erank) jr["erank_published"] = Rounded(*r.published_erank);
    nlohmann::ordered_json norm;
    for (Metric m : report.metrics) {
      norm[std::string(MetricName(m))] = Rounded(row.normalized.at(m));
    }
    jr["normalized"] = std::move(norm);
    j["rows"].push_back(std::move(jr));
  }
  nlohmann::ordered_json ordering;
  for (Metric m : report.metrics) {
    ordering[std::string(MetricName(m))] = report.ordering.at(m);
  }
  j["ordering"] = std::move(ordering);
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

namespace {

// Linear blend from a near-white to a dark blue; higher scores are darker.
std::string ShadeFor(double score) {
  constexpr int kLight[3] = {0xf7, 0xfb, 0xff};
  constexpr int kDark[3] = {0x08, 0x30, 0x6b};
  char buf[8];
  int c[3];
  for (int k = 0; k < 3; ++k) {
    c[k] = static_cast<int>(kLight[k] + (kDark[k] - kLight[k]) * score + 0.5);
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

std::string Fixed2(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string FormatReportSvg(const MetricReport& report) {
  constexpr int kLabelWidth = 150;
  constexpr int kCellWidth = 90;
  constexpr int kCellHeight = 24;
  constexpr int kHeader = 56;
  constexpr int kMargin = 10;
  const int cols = static_cast<int>(report.metrics.size());
  const int rows = static_cast<int>(report.rows.size());
  const int width = 2 * kMargin + kLabelWidth + cols * kCellWidth;
  const int height = 2 * kMargin + kHeader + rows * kCellHeight;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"" + std::to_string(kMargin) + "\" y=\"" +
         std::to_string(kMargin + 14) +
         "\" font-size=\"14\" font-weight=\"bold\">Normalized scores "
         "(higher = better), sorted by " +
         std::string(MetricName(report.primary)) + "</text>\n";
  for (int c = 0; c < cols; ++c) {
    const int x = kMargin + kLabelWidth + c * kCellWidth + kCellWidth / 2;
    out += "<text x=\"" + std::to_string(x) + "\" y=\"" +
           std::to_string(kMargin + kHeader - 8) +
           "\" text-anchor=\"middle\" font-weight=\"bold\">" +
           std::string(MetricName(report.metrics[c])) + "</text>\n";
  }
  int r = 0;
  for (const std::string& id : report.primary_ordering()) {
    const ReportRow& row = report.row(id);
    const int y = kMargin + kHeader + r * kCellHeight;
    out += "<text x=\"" + std::to_string(kMargin + kLabelWidth - 8) +
           "\" y=\"" + std::to_string(y + kCellHeight / 2 + 4) +
           "\" text-anchor=\"end\">" + XmlEscape(id) + "</text>\n";
    for (int c = 0; c < cols; ++c) {
      const Metric m = report.metrics[c];
      const double score = row.normalized.at(m);
      const int x = kMargin + kLabelWidth + c * kCellWidth;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(kCellWidth) + "\" height=\"" +
             std::to_string(kCellHeight) + "\" fill=\"" + ShadeFor(score) +
             "\" stroke=\"#ffffff\" data-spec=\"" + XmlEscape(id) +
             "\" data-metric=\"" + std::string(MetricName(m)) +
             "\" data-score=\"" + FormatNumber(score) + "\"/>\n";
      out += "<text x=\"" + std::to_string(x + kCellWidth / 2) + "\" y=\"" +
             std::to_string(y + kCellHeight / 2 + 4) +
             "\" text-anchor=\"middle\" fill=\"" +
             (score > 0.5 ? "#ffffff" : "#000000") + "\">" + Fixed2(score) +
             "</text>\n";
    }
    ++r;
  }
  out += "</svg>\n";
  return out;
}

std::vector<ComparisonRow> CompareToReference(
    std::span<const MeasurementRecord> measured,
    std::span<const MeasurementRecord> reference) {
  const auto delta = [](double m, double ref) -> std::optional<double> {
    if (ref == 0.0) return std::nullopt;
    return (m - ref) / ref;
  };
  std::vector<ComparisonRow> out;
  for (const MeasurementRecord& m : measured) {
    ComparisonRow row;
    row.spec_id = m.spec_id;
    const auto ref = std::find_if(
        reference.begin(), reference.end(),
        [&](const MeasurementRecord& r) { return r.spec_id == m.spec_id; });
    if (ref != reference.end()) {
      row.matched = true;
      row.delta_cpb = delta(m.cpb, ref->cpb);
      row.delta_ram = delta(m.ram_bytes, ref->ram_bytes);
      row.delta_rom = delta(m.rom_bytes, ref->rom_bytes);
      row.delta_energy = delta(m.energy_nj, ref->energy_nj);
      try {
        row.delta_erank = delta(Erank(m), Erank(*ref));
      } catch (const Error&) {
        // A record that cannot be ranked simply has no E-RANK delta.
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ComparisonRow> CompareToPaper(
    std::span<const MeasurementRecord> measured) {
  return CompareToReference(measured, PaperDataset());
}

std::string FormatComparisonCsv(std::span<const ComparisonRow> rows) {
  std::string out =
      "spec_id,matched,delta_cpb,delta_ram,delta_rom,delta_energy,"
      "delta_erank\n";
  for (const ComparisonRow& r : rows) {
    out += r.spec_id + "," + (r.matched ? "yes" : "no") + "," +
           OptionalNumber(r.delta_cpb) + "," + OptionalNumber(r.delta_ram) +
           "," + OptionalNumber(r.delta_rom) + "," +
           OptionalNumber(r.delta_energy) + "," +
           OptionalNumber(r.delta_erank) + "\n";
  }
  return out;
}

}  // namespace lwhb::metrics

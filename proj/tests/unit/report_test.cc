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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <regex>
#include <string>
#include <vector>

#include "lwhb/error.h"
#include "lwhb/metrics/dataset.h"
#include "test_data.h"

namespace lwhb::metrics {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

MetricReport ReferenceReport() {
  const auto records = EmbeddedPaperDataset();
  return BuildReport(records, kAllMetrics,
                     ReportOptions{LogForm::kRatio, Metric::kErank});
}

TEST(MetricNameTest, RoundTrip) {
  for (Metric m : kAllMetrics) EXPECT_EQ(ParseMetric(MetricName(m)), m);
  EXPECT_THROW(ParseMetric("speed"), Error);
  EXPECT_TRUE(HigherIsBetter(Metric::kErank));
  EXPECT_FALSE(HigherIsBetter(Metric::kCpb));
}

TEST(BuildReportTest, ErankOrderingOfReferenceData) {
  const MetricReport report = ReferenceReport();
  const auto& order = report.primary_ordering();
  ASSERT_EQ(order.size(), 24u);
  EXPECT_EQ(order[0], "skinny-tk2");
  EXPECT_EQ(order[1], "clx");
  EXPECT_EQ(order[2], "photon-256");
  EXPECT_EQ(order.back(), "blake2s");
  EXPECT_EQ(report.row("skinny-tk2").normalized.at(Metric::kErank), 1.0);
  EXPECT_EQ(report.row("blake2s").normalized.at(Metric::kErank), 0.0);
  EXPECT_TRUE(report.warnings.empty());
}

TEST(BuildReportTest, CostOrderingIsAscending) {
  const MetricReport report = ReferenceReport();
  const auto& cpb = report.ordering.at(Metric::kCpb);
  EXPECT_EQ(cpb.front(), "skinny-tk2");
  EXPECT_EQ(cpb.back(), "subterranean");
  EXPECT_EQ(report.row("skinny-tk2").normalized.at(Metric::kCpb), 1.0);
  EXPECT_EQ(report.row("subterranean").normalized.at(Metric::kCpb), 0.0);
  EXPECT_EQ(report.ordering.at(Metric::kRam).front(), "clx");
  EXPECT_EQ(report.ordering.at(Metric::kRom).back(), "blake3");
}

TEST(BuildReportTest, SortDefaultsToFirstMetricAndDeduplicates) {
  const auto records = EmbeddedPaperDataset();
  const Metric metrics[] = {Metric::kRom, Metric::kCpb, Metric::kRom};
  const MetricReport report = BuildReport(records, metrics);
  EXPECT_EQ(report.primary, Metric::kRom);
  EXPECT_EQ(report.metrics.size(), 2u);
  EXPECT_EQ(report.primary_ordering().front(), "clx");
  EXPECT_THROW(BuildReport(records, metrics, {LogForm::kRatio, Metric::kRam}),
               Error);
}

TEST(BuildReportTest, Errors) {
  auto records = EmbeddedPaperDataset();
  EXPECT_THROW(BuildReport({}, kAllMetrics), Error);
  EXPECT_THROW(BuildReport(records, {}), Error);
  records.push_back(records.front());
  try {
    BuildReport(records, kAllMetrics);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("photon-256"), std::string::npos);
  }
}

TEST(BuildReportTest, TiesKeepInputOrderAndWarn) {
  MeasurementRecord a{"a", 10, 10, 10, 10, RecordSource::kMeasured, {}};
  MeasurementRecord b = a;
  b.spec_id = "b";
  const std::vector<MeasurementRecord> records = {a, b};
  const MetricReport report = BuildReport(records, kAllMetrics);
  EXPECT_EQ(report.primary_ordering(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(report.warnings.size(), 5u);
  EXPECT_EQ(report.row("b").normalized.at(Metric::kErank), 1.0);

  const std::vector<MeasurementRecord> single = {a};
  const MetricReport one = BuildReport(single, kAllMetrics);
  EXPECT_EQ(one.row("a").normalized.at(Metric::kCpb), 1.0);
  EXPECT_FALSE(one.warnings.empty());
}

TEST(FormatReportTest, CsvShape) {
  const std::string csv = FormatReportCsv(ReferenceReport());
  const auto lines = Lines(csv);
  ASSERT_EQ(lines.size(), 25u);
  EXPECT_EQ(lines[0],
            "rank,spec_id,cpb,ram,rom,energy_nj,erank,erank_published,"
            "norm_cpb,norm_ram,norm_rom,norm_energy,norm_erank");
  EXPECT_EQ(lines[1].substr(0, 47),
            "1,skinny-tk2,204,559,6806,83.87,7.37596,7.38,1,");
  EXPECT_EQ(lines[2].substr(0, 14), "2,clx,1116,57,");
  EXPECT_EQ(csv, FormatReportCsv(ReferenceReport()));
}

TEST(FormatReportTest, JsonShape) {
  const auto j = nlohmann::json::parse(FormatReportJson(ReferenceReport()));
  EXPECT_EQ(j["primary"], "erank");
  ASSERT_EQ(j["rows"].size(), 24u);
  EXPECT_EQ(j["rows"][0]["spec_id"], "skinny-tk2");
  EXPECT_EQ(j["rows"][0]["source"], "paper");
  EXPECT_DOUBLE_EQ(j["rows"][0]["erank"].get<double>(), 7.37596);
  EXPECT_EQ(j["rows"][0]["normalized"]["erank"], 1.0);
  EXPECT_EQ(j["ordering"]["cpb"][0], "skinny-tk2");
  EXPECT_TRUE(j["warnings"].empty());
}

TEST(FormatReportTest, SvgHeatmapShadesBestCellDarkest) {
  const std::string svg = FormatReportSvg(ReferenceReport());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::regex cell(
      "fill=\"#([0-9a-f]{6})\"[^>]*data-spec=\"([^\"]+)\" "
      "data-metric=\"erank\"");
  std::map<std::string, int> brightness;
  int cells = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), cell);
       it != std::sregex_iterator(); ++it) {
    const std::string hex = (*it)[1];
    const int r = std::stoi(hex.substr(0, 2), nullptr, 16);
    const int g = std::stoi(hex.substr(2, 2), nullptr, 16);
    const int b = std::stoi(hex.substr(4, 2), nullptr, 16);
    brightness[(*it)[2]] = r + g + b;
    ++cells;
  }
  ASSERT_EQ(cells, 24);
  const auto darkest = std::min_element(
      brightness.begin(), brightness.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  EXPECT_EQ(darkest->first, "skinny-tk2");
  EXPECT_EQ(brightness.at("blake2s"), 0xf7 + 0xfb + 0xff);
}

TEST(CompareTest, SelfComparisonAndUnmatched) {
  const auto self = CompareToPaper(EmbeddedPaperDataset());
  ASSERT_EQ(self.size(), 24u);
  for (const ComparisonRow& r : self) {
    EXPECT_TRUE(r.matched);
    EXPECT_EQ(*r.delta_cpb, 0.0);
    EXPECT_EQ(*r.delta_erank, 0.0);
  }
  const auto subset = ParseMeasurementCsv(
      ReadTextFile(lwhb::testing::DataPath("measurements/subset.csv")),
      RecordSource::kMeasured);
  const auto rows = CompareToPaper(subset);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].matched);
  EXPECT_EQ(*rows[0].delta_energy, 0.0);
  EXPECT_FALSE(rows[1].matched);
  EXPECT_FALSE(rows[1].delta_cpb.has_value());
  const auto lines = Lines(FormatComparisonCsv(rows));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[2], "foo,no,,,,,");
}

TEST(CompareTest, RelativeDeltas) {
  std::vector<MeasurementRecord> ref = {
      {"x", 100, 10, 100, 50, RecordSource::kPaperTable2, {}}};
  std::vector<MeasurementRecord> mine = {
      {"x", 150, 10, 50, 50, RecordSource::kMeasured, {}}};
  const auto rows = CompareToReference(mine, ref);
  EXPECT_DOUBLE_EQ(*rows[0].delta_cpb, 0.5);
  EXPECT_DOUBLE_EQ(*rows[0].delta_rom, -0.5);
  EXPECT_DOUBLE_EQ(*rows[0].delta_ram, 0.0);
}

}  // namespace
}  // namespace lwhb::metrics

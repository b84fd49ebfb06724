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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "lwhb/error.h"
#include "lwhb/metrics/dataset.h"
#include "test_data.h"

namespace lwhb::metrics {
namespace {

// E-RANK of every reference row, evaluated independently with exact
// rational arithmetic and rounded once to double.
const std::map<std::string, double>& ExactErank() {
  static const std::map<std::string, double> kTable = {
      {"photon-256", 0.83799262259451623},
      {"lesamnta-lw", 0.18375095904579453},
      {"blake2s", 0.0061086034346013833},
      {"blake3", 0.0062506062650456527},
      {"ascon", 0.121669335429072},
      {"photon-beetle", 0.19800928012778179},
      {"xoodyak", 0.1075684219152805},
      {"knot", 0.042384773228696791},
      {"orangish", 0.49253849101679625},
      {"shamas", 0.019189546919143503},
      {"siv-rijndael", 0.74685195841810537},
      {"siv-tem-photon", 0.066700523821253549},
      {"skinny-tk2", 7.3759628843058263},
      {"sneikha", 0.051448723562413923},
      {"triad", 0.057708209644038236},
      {"coral", 0.67073630010699892},
      {"gimli", 0.26079519576720139},
      {"clx", 2.5287187273678664},
      {"ace-h", 0.070603839391979242},
      {"esch256", 0.17809230416460931},
      {"subterranean", 0.0095132480687765975},
      {"saturnin", 0.037182883661912865},
      {"isap", 0.032493293065032278},
      {"gage", 0.092020995238443579},
  };
  return kTable;
}

MeasurementRecord Record(std::string id, double cpb, double ram, double rom,
                         double nj) {
  MeasurementRecord r;
  r.spec_id = std::move(id);
  r.cpb = cpb;
  r.ram_bytes = ram;
  r.rom_bytes = rom;
  r.energy_nj = nj;
  return r;
}

TEST(ErankTest, MatchesExactOracleForEveryReferenceRow) {
  const auto records = EmbeddedPaperDataset();
  ASSERT_EQ(records.size(), 24u);
  for (const MeasurementRecord& r : records) {
    SCOPED_TRACE(r.spec_id);
    const double expected = ExactErank().at(r.spec_id);
    EXPECT_NEAR(Erank(r), expected, 1e-15 * expected);
  }
}

TEST(ErankTest, ReproducesPublishedColumn) {
  for (const MeasurementRecord& r : EmbeddedPaperDataset()) {
    SCOPED_TRACE(r.spec_id);
    ASSERT_TRUE(r.published_erank.has_value());
    const double published = *r.published_erank;
    const double e = Erank(r);
    EXPECT_TRUE(std::abs(e - published) <= 0.01 ||
                std::abs(e - published) / published <= 0.02)
        << e << " vs " << published;
  }
}

TEST(ErankTest, Anchors) {
  EXPECT_NEAR(Erank(Record("skinny-tk2", 204, 559, 6806, 83.87)), 7.38, 0.01);
  EXPECT_NEAR(Erank(Record("clx", 1116, 57, 630, 476.28)), 2.53, 0.01);
  EXPECT_NEAR(Erank(Record("photon-256", 845, 588, 2708, 363.6)), 0.84, 0.01);
  EXPECT_NEAR(Erank(Record("blake2s", 3516, 647, 28704, 1552.09)), 0.0061,
              0.0001);
}

TEST(ErankTest, RamCountsTwiceAsMuchAsRom) {
  const double a = Erank(Record("a", 100, 100, 1000, 10));
  const double b = Erank(Record("b", 100, 0, 1200, 10));
  EXPECT_DOUBLE_EQ(a, b);
  EXPECT_DOUBLE_EQ(Erank(Record("c", 200, 100, 1000, 10)), a / 2);
  EXPECT_DOUBLE_EQ(Erank(Record("d", 100, 100, 1000, 40)), a / 4);
}

TEST(ErankTest, RejectsInvalidInputs) {
  EXPECT_THROW(Erank(Record("x", 0, 1, 1, 1)), Error);
  EXPECT_THROW(Erank(Record("x", 1, 1, 1, 0)), Error);
  EXPECT_THROW(Erank(Record("x", 1, -1, 10, 1)), Error);
  EXPECT_THROW(Erank(Record("x", 1, 0, 0, 1)), Error);
  EXPECT_THROW(Erank(Record("x", std::nan(""), 1, 1, 1)), Error);
}

TEST(FomTest, Examples) {
  EXPECT_DOUBLE_EQ(Fom(1e6, 1e6, 1000), 1e-6);
  EXPECT_DOUBLE_EQ(Fom(2e6, 1e6, 1000), 2 * Fom(1e6, 1e6, 1000));
  EXPECT_DOUBLE_EQ(Fom(1e6, 1e6, 2000), Fom(1e6, 1e6, 1000) / 4);
  EXPECT_THROW(Fom(0, 1, 1), Error);
  EXPECT_THROW(Fom(1, 1, -1), Error);
}

TEST(InvertedMinMaxTest, Examples) {
  const std::vector<double> v = {10, 20, 30};
  const Normalized n = NormalizeInvertedMinMax(v);
  EXPECT_FALSE(n.degenerate);
  EXPECT_EQ(n.values, (std::vector<double>{1.0, 0.5, 0.0}));

  const std::vector<double> same = {4, 4, 4};
  const Normalized d = NormalizeInvertedMinMax(same);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.values, (std::vector<double>{1.0, 1.0, 1.0}));

  const std::vector<double> one = {1};
  EXPECT_THROW(NormalizeInvertedMinMax(one), Error);
  const std::vector<double> inf = {1, INFINITY};
  EXPECT_THROW(NormalizeInvertedMinMax(inf), Error);
}

TEST(LogMinMaxTest, Examples) {
  const std::vector<double> v = {1, 10, 100};
  for (LogForm form : {LogForm::kRatio, LogForm::kProduct}) {
    const Normalized n = NormalizeLogMinMax(v, form);
    ASSERT_EQ(n.values.size(), 3u);
    EXPECT_EQ(n.values[0], 0.0);
    EXPECT_NEAR(n.values[1], 0.5, 1e-12);
    EXPECT_EQ(n.values[2], 1.0);
  }
  const std::vector<double> same = {2, 2};
  EXPECT_TRUE(NormalizeLogMinMax(same).degenerate);
  const std::vector<double> zero = {0, 1};
  EXPECT_THROW(NormalizeLogMinMax(zero), Error);
  const std::vector<double> negative = {-1, 1};
  EXPECT_THROW(NormalizeLogMinMax(negative), Error);
}

TEST(LogMinMaxTest, ReferenceColumnEndpoints) {
  std::vector<double> published;
  std::vector<std::string> ids;
  for (const MeasurementRecord& r : EmbeddedPaperDataset()) {
    published.push_back(*r.published_erank);
    ids.push_back(r.spec_id);
  }
  const Normalized n = NormalizeLogMinMax(published);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == "skinny-tk2") EXPECT_EQ(n.values[i], 1.0);
    if (ids[i] == "blake2s") EXPECT_EQ(n.values[i], 0.0);
  }
}

// Random vectors: outputs stay in [0, 1], extremes map to the endpoints,
// and ordering is preserved (log) or reversed (inverted min-max).
TEST(NormalizationPropertyTest, RandomVectors) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> len(2, 40);
  std::uniform_real_distribution<double> exponent(-4.0, 6.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(len(rng));
    for (double& x : v) x = std::pow(10.0, exponent(rng));
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const std::size_t imin = lo - v.begin(), imax = hi - v.begin();

    const Normalized inv = NormalizeInvertedMinMax(v);
    for (LogForm form : {LogForm::kRatio, LogForm::kProduct}) {
      const Normalized lg = NormalizeLogMinMax(v, form);
      EXPECT_EQ(lg.values[imin], 0.0);
      EXPECT_EQ(lg.values[imax], 1.0);
      for (std::size_t i = 0; i < v.size(); ++i) {
        ASSERT_GE(lg.values[i], 0.0);
        ASSERT_LE(lg.values[i], 1.0);
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (v[i] < v[j]) ASSERT_LE(lg.values[i], lg.values[j]);
        }
      }
    }
    EXPECT_EQ(inv.values[imin], 1.0);
    EXPECT_EQ(inv.values[imax], 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      ASSERT_GE(inv.values[i], 0.0);
      ASSERT_LE(inv.values[i], 1.0);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[i] < v[j]) ASSERT_GE(inv.values[i], inv.values[j]);
      }
    }
  }
}

TEST(NormalizationPropertyTest, RatioAndProductFormsAgree) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.001, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(10);
    for (double& x : v) x = d(rng);
    const Normalized a = NormalizeLogMinMax(v, LogForm::kRatio);
    const Normalized b = NormalizeLogMinMax(v, LogForm::kProduct);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
    }
  }
}

TEST(DatasetTest, ParsesOptionalPublishedColumn) {
  const auto recs = ParseMeasurementCsv(
      "spec_id,cpb,ram,rom,energy_nj\nfoo,1,2,3,4\n", RecordSource::kMeasured);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].spec_id, "foo");
  EXPECT_EQ(recs[0].rom_bytes, 3.0);
  EXPECT_FALSE(recs[0].published_erank.has_value());
  EXPECT_EQ(recs[0].source, RecordSource::kMeasured);

  const auto round = ParseMeasurementCsv(FormatMeasurementCsv(recs),
                                         RecordSource::kExternal);
  EXPECT_EQ(round[0].energy_nj, 4.0);
}

TEST(DatasetTest, Errors) {
  auto parse_line = [](const std::string& csv) -> std::size_t {
    try {
      ParseMeasurementCsv(csv, RecordSource::kMeasured);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError);
      return e.line();
    }
    ADD_FAILURE() << "no error for: " << csv;
    return 0;
  };
  EXPECT_EQ(parse_line("spec,cpb\n"), 1u);
  EXPECT_EQ(parse_line("spec_id,cpb,ram,rom,energy_nj\na,1,2,3\n"), 2u);
  EXPECT_EQ(parse_line("spec_id,cpb,ram,rom,energy_nj\na,1,2,x,4\n"), 2u);
  EXPECT_EQ(parse_line("spec_id,cpb,ram,rom,energy_nj\na,1,2,3,4\na,1,2,3,4\n"),
            3u);
  EXPECT_THROW(ParseMeasurementCsv("", RecordSource::kMeasured), Error);
}

TEST(DatasetTest, EnvironmentOverride) {
  const std::string path = lwhb::testing::DataPath("measurements/subset.csv");
  ASSERT_EQ(setenv(kDatasetEnvVar, path.c_str(), 1), 0);
  const auto overridden = PaperDataset();
  unsetenv(kDatasetEnvVar);
  ASSERT_EQ(overridden.size(), 2u);
  EXPECT_EQ(overridden[1].spec_id, "foo");
  EXPECT_EQ(PaperDataset().size(), 24u);
}

}  // namespace
}  // namespace lwhb::metrics

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

#include "lwhb/hashkit/kat.h"

#include <gtest/gtest.h>

#include <string>

#include "lwhb/error.h"
#include "test_data.h"

namespace lwhb::hashkit {
namespace {

using lwhb::testing::ReadData;

class KatFileTest : public ::testing::TestWithParam<std::string> {};

TEST_P(KatFileTest, AllVectorsMatch) {
  const std::string id = GetParam();
  const auto vectors = ParseKatFile(ReadData("kat/" + id + "/LWC_HASH_KAT_256.txt"));
  ASSERT_GE(vectors.size(), 256u);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    EXPECT_EQ(vectors[i].count, i + 1);
    EXPECT_EQ(vectors[i].msg.size(), i);
  }
  const KatOutcome outcome = RunKat(id, vectors);
  EXPECT_EQ(outcome.total, vectors.size());
  EXPECT_TRUE(outcome.failures.empty())
      << id << ": first failing Count = " << outcome.failures.front().count;
  EXPECT_TRUE(outcome.ok());
}

INSTANTIATE_TEST_SUITE_P(Implemented, KatFileTest,
                         ::testing::Values("ascon", "gimli", "xoodyak",
                                           "photon-beetle", "esch256",
                                           "blake2s"),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

TEST(KatTest, Blake2sRfcFile) {
  const auto vectors = ParseKatFile(ReadData("kat/blake2s/rfc7693.txt"));
  ASSERT_EQ(vectors.size(), 1u);
  EXPECT_TRUE(RunKat("blake2s", vectors).ok());
}

TEST(KatTest, ParsesRecordsAndLineNumbers) {
  const auto v = ParseKatFile(
      "Count = 1\nMsg = \nMD = 00FF\n\nCount = 2\r\nMsg = 00\r\nMD = 01\r\n");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_TRUE(v[0].msg.empty());
  EXPECT_EQ(v[0].md, (Bytes{0x00, 0xff}));
  EXPECT_EQ(v[1].count, 2u);
  EXPECT_EQ(v[1].line, 5u);
}

TEST(KatTest, CorruptedDigestIsReported) {
  std::string text = ReadData("kat/ascon/LWC_HASH_KAT_256.txt");
  const std::size_t md = text.find("MD = ", text.find("Count = 3\n"));
  text[md + 5] = text[md + 5] == '0' ? '1' : '0';
  const KatOutcome outcome = RunKat("ascon", ParseKatFile(text));
  ASSERT_EQ(outcome.failures.size(), 1u);
  EXPECT_EQ(outcome.failures[0].count, 3u);
  EXPECT_FALSE(outcome.ok());
}

TEST(KatTest, ParseErrors) {
  const auto code_of = [](const std::string& text) {
    try {
      ParseKatFile(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kStateError;  // sentinel: no error raised
  };
  EXPECT_EQ(code_of(""), ErrorCode::kParseError);
  EXPECT_EQ(code_of("\n\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("Count = 1\nMsg = 00\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("Count = x\nMsg = 00\nMD = 00\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("Count = 1\nMsg = 0\nMD = 00\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("Count = 1\nMsg = 00\nTag = 00\n"), ErrorCode::kParseError);
  try {
    ParseKatFile("Count = 1\nMsg = 00\nMD = zz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

}  // namespace
}  // namespace lwhb::hashkit

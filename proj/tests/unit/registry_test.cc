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

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "lwhb/error.h"
#include "lwhb/hashkit/spec.h"

namespace lwhb::hashkit {
namespace {

TEST(RegistryTest, HasTwentyFourUniqueEntries) {
  const auto list = RegistryList();
  EXPECT_EQ(list.size(), 24u);
  std::set<std::string_view> ids;
  for (const HashSpec& s : list) EXPECT_TRUE(ids.insert(s.id).second) << s.id;
}

TEST(RegistryTest, ImplementedSubset) {
  const std::set<std::string_view> expected = {
      "ascon", "gimli", "xoodyak", "photon-beetle", "esch256", "blake2s"};
  std::set<std::string_view> implemented;
  for (const HashSpec& s : RegistryList()) {
    if (s.implemented) implemented.insert(s.id);
  }
  EXPECT_EQ(implemented, expected);
}

TEST(RegistryTest, AsconParameters) {
  const HashSpec* s = FindSpec("ascon");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->rate_bits, 64u);
  EXPECT_EQ(s->capacity_bits, 256u);
  EXPECT_EQ(s->state_bits, 320u);
  EXPECT_EQ(s->rounds, 12u);
  EXPECT_NE(s->rounds_note.find("8"), std::string_view::npos);
  EXPECT_EQ(s->structure, Structure::kSponge);
}

TEST(RegistryTest, PhotonBeetleParameters) {
  const HashSpec* s = FindSpec("photon-beetle");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->rate_bits, 32u);
  EXPECT_EQ(s->capacity_bits, 224u);
  EXPECT_EQ(s->state_bits, 256u);
}

TEST(RegistryTest, SpongeFamilyFitsState) {
  for (const HashSpec& s : RegistryList()) {
    if (!IsSpongeFamily(s.structure) || s.capacity_bits == 0) continue;
    EXPECT_LE(s.rate_bits + s.capacity_bits, s.state_bits) << s.id;
  }
  // Plain sponge example: rate + capacity is the whole state.
  const HashSpec* ascon = FindSpec("ascon");
  EXPECT_EQ(ascon->rate_bits + ascon->capacity_bits, ascon->state_bits);
}

TEST(RegistryTest, MerkleDamgardStyleEntriesHaveNoCapacity) {
  for (const HashSpec& s : RegistryList()) {
    if (IsSpongeFamily(s.structure)) {
      EXPECT_TRUE(s.capacity_applicable) << s.id;
    } else {
      EXPECT_FALSE(s.capacity_applicable) << s.id;
      EXPECT_EQ(s.capacity_bits, 0u) << s.id;
    }
  }
}

TEST(RegistryTest, WidthsAreByteMultiplesExceptSubterraneanInputRate) {
  for (const HashSpec& s : RegistryList()) {
    EXPECT_EQ(s.rate_bits % 8, 0u) << s.id;
    EXPECT_EQ(s.digest_bits % 8, 0u) << s.id;
  }
  const HashSpec* sub = FindSpec("subterranean");
  ASSERT_NE(sub, nullptr);
  ASSERT_TRUE(sub->input_rate_bits.has_value());
  EXPECT_EQ(*sub->input_rate_bits, 9u);
  EXPECT_EQ(sub->state_bits, 257u);
  EXPECT_EQ(sub->state_bytes(), 33u);
}

TEST(RegistryTest, VariableRoundEntriesCarryNotes) {
  for (std::string_view id : {"clx", "esch256", "isap"}) {
    const HashSpec* s = FindSpec(id);
    ASSERT_NE(s, nullptr);
    EXPECT_TRUE(s->rounds_variable) << id;
    EXPECT_FALSE(s->rounds_note.empty()) << id;
  }
  EXPECT_FALSE(FindSpec("clx")->rounds.has_value());
  EXPECT_EQ(FindSpec("esch256")->rounds, 7u);
}

TEST(RegistryTest, UnknownAndRegistryOnlyIds) {
  EXPECT_EQ(FindSpec("nope"), nullptr);
  try {
    RequireImplemented("knot");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotImplemented);
  }
  EXPECT_THROW(RequireImplemented("nope"), Error);
  EXPECT_EQ(RequireImplemented("gimli").id, "gimli");
}

TEST(RegistryTest, StructureNames) {
  EXPECT_EQ(StructureName(Structure::kHaifa), "HAIFA");
  EXPECT_EQ(StructureName(FindSpec("xoodyak")->structure), "Duplex");
}

}  // namespace
}  // namespace lwhb::hashkit

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

// Structural parameters of the benchmarked lightweight hash functions.
//
// The registry is a fixed, immutable table with one entry per benchmarked
// function. Only a subset carries a working implementation; the others are
// described for reporting and cross-referencing measurement data.

#ifndef LWHB_HASHKIT_SPEC_H_
#define LWHB_HASHKIT_SPEC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace lwhb::hashkit {

enum class Structure {
  kSponge,
  kExtendedSponge,
  kDuplex,
  kModifiedSponge,
  kMerkleDamgard,
  kHaifa,
  kBinaryTree,
  kFlatSponge,
};

std::string_view StructureName(Structure s);

// True for every structure built around a rate/capacity split.
constexpr bool IsSpongeFamily(Structure s) {
  return s == Structure::kSponge || s == Structure::kExtendedSponge ||
         s == Structure::kDuplex || s == Structure::kModifiedSponge ||
         s == Structure::kFlatSponge;
}

struct HashSpec {
  std::string_view id;
  std::string_view name;
  std::uint32_t rate_bits;
  // Set only when absorption uses a narrower rate than squeezing
  // (Subterranean absorbs 9 bits per round, squeezes 32).
  std::optional<std::uint32_t> input_rate_bits;
  // 0 with capacity_applicable == false for Merkle-Damgard style designs.
  std::uint32_t capacity_bits;
  bool capacity_applicable;
  std::uint32_t state_bits;
  Structure structure;
  std::string_view primitive;
  // Dominant round count; empty when the design has no single count.
  std::optional<std::uint32_t> rounds;
  // Listed as "var" in the source table.
  bool rounds_variable;
  std::string_view rounds_note;
  std::uint32_t digest_bits;
  bool implemented;
  // Free-form remark about how a registry value relates to the source table.
  std::string_view note;

  std::size_t state_bytes() const { return (state_bits + 7) / 8; }
  std::size_t digest_bytes() const { return digest_bits / 8; }
};

// All registry entries, in benchmark table order.
std::span<const HashSpec> RegistryList();

// nullptr when the id is unknown.
const HashSpec* FindSpec(std::string_view id);

// Throws kNotImplemented for unknown ids and for registry-only entries.
const HashSpec& RequireImplemented(std::string_view id);

}  // namespace lwhb::hashkit

#endif  // LWHB_HASHKIT_SPEC_H_

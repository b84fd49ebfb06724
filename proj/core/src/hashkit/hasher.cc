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

#include "lwhb/hashkit/hasher.h"

#include <string>

#include "hashkit/internal.h"
#include "lwhb/error.h"

namespace lwhb::hashkit {

using internal::LoadBe64;
using internal::LoadLe32;
using internal::StoreBe64;
using internal::StoreLe32;

void HashInstance::Update(ByteView data) {
  if (phase_ != Phase::kAbsorbing) {
    ThrowStateError("update after finalize on '" + std::string(spec_.id) +
                    "'");
  }
  Absorb(data);
  absorbed_bytes_ += data.size();
}

Digest HashInstance::Final() {
  if (phase_ != Phase::kAbsorbing) {
    ThrowStateError("'" + std::string(spec_.id) + "' already finalized");
  }
  phase_ = Phase::kSqueezing;
  Digest digest{Bytes(spec_.digest_bytes()), std::string(spec_.id)};
  Squeeze(digest.bytes);
  phase_ = Phase::kFinalized;
  return digest;
}

std::unique_ptr<HashInstance> NewHashInstance(std::string_view spec_id) {
  const HashSpec& spec = RequireImplemented(spec_id);
  if (spec.id == "ascon") return internal::NewAsconHash(spec);
  if (spec.id == "gimli") return internal::NewGimliHash(spec);
  if (spec.id == "xoodyak") return internal::NewXoodyakHash(spec);
  if (spec.id == "photon-beetle") return internal::NewPhotonBeetleHash(spec);
  if (spec.id == "esch256") return internal::NewEsch256(spec);
  if (spec.id == "blake2s") return internal::NewBlake2s(spec);
  ThrowNotImplemented("no hash instance for '" + std::string(spec_id) + "'");
}

Digest Hash(std::string_view spec_id, ByteView message) {
  auto instance = NewHashInstance(spec_id);
  instance->Update(message);
  return instance->Final();
}

Digest HashStreaming(std::string_view spec_id,
                     std::span<const ByteView> chunks) {
  auto instance = NewHashInstance(spec_id);
  for (ByteView chunk : chunks) instance->Update(chunk);
  return instance->Final();
}

namespace {

template <std::size_t N>
std::array<std::uint32_t, N> LoadWordsLe(ByteView in) {
  std::array<std::uint32_t, N> w{};
  for (std::size_t i = 0; i < N; ++i) w[i] = LoadLe32(in.data() + 4 * i);
  return w;
}

template <std::size_t N>
Bytes StoreWordsLe(const std::array<std::uint32_t, N>& w) {
  Bytes out(4 * N);
  for (std::size_t i = 0; i < N; ++i) StoreLe32(out.data() + 4 * i, w[i]);
  return out;
}

}  // namespace

Bytes Permute(std::string_view spec_id, ByteView state) {
  const HashSpec& spec = RequireImplemented(spec_id);
  if (spec.structure == Structure::kHaifa) {
    ThrowNotImplemented("'" + std::string(spec.id) +
                        "' is built on a compression function, not a "
                        "standalone permutation");
  }
  if (state.size() != spec.state_bytes()) {
    ThrowInvalidArgument("state for '" + std::string(spec.id) + "' must be " +
                         std::to_string(spec.state_bytes()) + " bytes, got " +
                         std::to_string(state.size()));
  }
  if (spec.id == "ascon") {
    std::array<std::uint64_t, 5> s{};
    for (int i = 0; i < 5; ++i) s[i] = LoadBe64(state.data() + 8 * i);
    internal::AsconPermute(s, 12);
    Bytes out(40);
    for (int i = 0; i < 5; ++i) StoreBe64(out.data() + 8 * i, s[i]);
    return out;
  }
  if (spec.id == "gimli") {
    auto s = LoadWordsLe<12>(state);
    internal::GimliPermute(s);
    return StoreWordsLe(s);
  }
  if (spec.id == "xoodyak") {
    auto s = LoadWordsLe<12>(state);
    internal::XoodooPermute(s);
    return StoreWordsLe(s);
  }
  if (spec.id == "esch256") {
    auto s = LoadWordsLe<12>(state);
    internal::Sparkle384Permute(s, static_cast<int>(*spec.rounds));
    return StoreWordsLe(s);
  }
  if (spec.id == "photon-beetle") {
    std::array<std::uint8_t, 32> s{};
    std::copy(state.begin(), state.end(), s.begin());
    internal::Photon256Permute(s);
    return Bytes(s.begin(), s.end());
  }
  ThrowNotImplemented("no permutation for '" + std::string(spec_id) + "'");
}

Bytes Pad10Star(ByteView block, std::size_t rate_bytes,
                std::uint8_t domain_byte) {
  if (rate_bytes == 0) ThrowInvalidArgument("rate must be positive");
  if (block.size() >= rate_bytes) {
    ThrowInvalidArgument("block of " + std::to_string(block.size()) +
                         " bytes does not fit a " +
                         std::to_string(rate_bytes) + "-byte rate with padding");
  }
  Bytes out(rate_bytes, 0);
  std::copy(block.begin(), block.end(), out.begin());
  out[block.size()] = domain_byte;
  return out;
}

}  // namespace lwhb::hashkit

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

// Ascon-Hash (v1.2): 320-bit state of five big-endian 64-bit words, 64-bit
// rate, p^12 for initialization, absorption and squeezing.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

void AsconPermute(std::array<std::uint64_t, 5>& s, int rounds) {
  for (int r = 12 - rounds; r < 12; ++r) {
    // Round constant.
    s[2] ^= static_cast<std::uint64_t>(0xf0 - r * 0x10 + r * 0x1);
    // Substitution layer (bit-sliced 5-bit S-box).
    s[0] ^= s[4];
    s[4] ^= s[3];
    s[2] ^= s[1];
    std::array<std::uint64_t, 5> t;
    for (int i = 0; i < 5; ++i) t[i] = ~s[i] & s[(i + 1) % 5];
    for (int i = 0; i < 5; ++i) s[i] ^= t[(i + 1) % 5];
    s[1] ^= s[0];
    s[0] ^= s[4];
    s[3] ^= s[2];
    s[2] = ~s[2];
    // Linear diffusion layer.
    s[0] ^= std::rotr(s[0], 19) ^ std::rotr(s[0], 28);
    s[1] ^= std::rotr(s[1], 61) ^ std::rotr(s[1], 39);
    s[2] ^= std::rotr(s[2], 1) ^ std::rotr(s[2], 6);
    s[3] ^= std::rotr(s[3], 10) ^ std::rotr(s[3], 17);
    s[4] ^= std::rotr(s[4], 7) ^ std::rotr(s[4], 41);
  }
}

namespace {

constexpr std::size_t kRate = 8;

class AsconHash final : public HashInstance {
 public:
  explicit AsconHash(const HashSpec& spec) : HashInstance(spec) {
    // IV: k=0, r=64, a=12, b=12, h=256.
    s_ = {0x00400c0000000100ULL, 0, 0, 0, 0};
    AsconPermute(s_, 12);
  }

  Bytes state() const override {
    Bytes out(40);
    for (int i = 0; i < 5; ++i) StoreBe64(out.data() + 8 * i, s_[i]);
    return out;
  }

 protected:
  void Absorb(ByteView data) override {
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kRate> block) {
      s_[0] ^= LoadBe64(block.data());
      AsconPermute(s_, 12);
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    const Bytes last = Pad10Star(buffer_.pending(), kRate, 0x80);
    s_[0] ^= LoadBe64(last.data());
    AsconPermute(s_, 12);
    std::size_t pos = 0;
    while (true) {
      std::uint8_t word[kRate];
      StoreBe64(word, s_[0]);
      const std::size_t take = std::min(kRate, out.size() - pos);
      std::memcpy(out.data() + pos, word, take);
      pos += take;
      if (pos == out.size()) break;
      AsconPermute(s_, 12);
    }
  }

 private:
  std::array<std::uint64_t, 5> s_{};
  BlockBuffer<kRate> buffer_{false};
};

}  // namespace

std::unique_ptr<HashInstance> NewAsconHash(const HashSpec& spec) {
  return std::make_unique<AsconHash>(spec);
}

}  // namespace lwhb::hashkit::internal

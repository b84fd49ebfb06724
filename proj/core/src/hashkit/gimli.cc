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

// Gimli-Hash: 384-bit state, 128-bit rate, 24-round Gimli permutation.
// Padding follows the submitted reference: one 0x01 byte after the message
// and a 0x01 domain bit in the last state byte.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

void GimliPermute(std::array<std::uint32_t, 12>& s) {
  for (std::uint32_t round = 24; round > 0; --round) {
    for (int column = 0; column < 4; ++column) {
      const std::uint32_t x = std::rotl(s[column], 24);
      const std::uint32_t y = std::rotl(s[4 + column], 9);
      const std::uint32_t z = s[8 + column];
      s[8 + column] = x ^ (z << 1) ^ ((y & z) << 2);
      s[4 + column] = y ^ x ^ ((x | z) << 1);
      s[column] = z ^ y ^ ((x & y) << 3);
    }
    if ((round & 3) == 0) {  // small swap
      std::swap(s[0], s[1]);
      std::swap(s[2], s[3]);
    }
    if ((round & 3) == 2) {  // big swap
      std::swap(s[0], s[2]);
      std::swap(s[1], s[3]);
    }
    if ((round & 3) == 0) s[0] ^= 0x9e377900U ^ round;
  }
}

namespace {

constexpr std::size_t kRate = 16;

class GimliHash final : public HashInstance {
 public:
  explicit GimliHash(const HashSpec& spec) : HashInstance(spec) {}

  Bytes state() const override {
    Bytes out(48);
    for (int i = 0; i < 12; ++i) StoreLe32(out.data() + 4 * i, s_[i]);
    return out;
  }

 protected:
  void Absorb(ByteView data) override {
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kRate> block) {
      XorBytes(0, block);
      GimliPermute(s_);
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    const ByteView last = buffer_.pending();
    XorBytes(0, last);
    XorByte(last.size(), 0x01);
    XorByte(47, 0x01);
    GimliPermute(s_);
    for (std::size_t pos = 0; pos < out.size(); pos += kRate) {
      if (pos > 0) GimliPermute(s_);
      const Bytes bytes = state();
      std::memcpy(out.data() + pos, bytes.data(),
                  std::min(kRate, out.size() - pos));
    }
  }

 private:
  void XorByte(std::size_t index, std::uint8_t value) {
    s_[index / 4] ^= static_cast<std::uint32_t>(value) << (8 * (index % 4));
  }

  void XorBytes(std::size_t offset, ByteView bytes) {
    for (std::size_t i = 0; i < bytes.size(); ++i) XorByte(offset + i, bytes[i]);
  }

  std::array<std::uint32_t, 12> s_{};
  BlockBuffer<kRate> buffer_{false};
};

}  // namespace

std::unique_ptr<HashInstance> NewGimliHash(const HashSpec& spec) {
  return std::make_unique<GimliHash>(spec);
}

}  // namespace lwhb::hashkit::internal

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

// Xoodyak in hash mode: the Cyclist duplex over Xoodoo[12] with a 16-byte
// hash rate. Absorb blocks are framed by Down(); every block after the first
// is preceded by an Up() that only permutes.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

namespace {

constexpr std::uint32_t kXoodooRc[12] = {
    0x058, 0x038, 0x3c0, 0x0d0, 0x120, 0x014,
    0x060, 0x02c, 0x380, 0x0f0, 0x1a0, 0x012,
};

}  // namespace

void XoodooPermute(std::array<std::uint32_t, 12>& a, int rounds) {
  // a[4 * y + x]: plane y, lane x.
  for (int r = 12 - rounds; r < 12; ++r) {
    // theta
    std::uint32_t e[4];
    for (int x = 0; x < 4; ++x) {
      const std::uint32_t p = a[x] ^ a[4 + x] ^ a[8 + x];
      e[(x + 1) % 4] = std::rotl(p, 5) ^ std::rotl(p, 14);
    }
    for (int i = 0; i < 12; ++i) a[i] ^= e[i % 4];
    // rho-west
    std::uint32_t plane1[4];
    for (int x = 0; x < 4; ++x) plane1[(x + 1) % 4] = a[4 + x];
    for (int x = 0; x < 4; ++x) {
      a[4 + x] = plane1[x];
      a[8 + x] = std::rotl(a[8 + x], 11);
    }
    // iota
    a[0] ^= kXoodooRc[r];
    // chi
    for (int x = 0; x < 4; ++x) {
      const std::uint32_t a0 = a[x], a1 = a[4 + x], a2 = a[8 + x];
      a[x] = a0 ^ (~a1 & a2);
      a[4 + x] = a1 ^ (~a2 & a0);
      a[8 + x] = a2 ^ (~a0 & a1);
    }
    // rho-east
    std::uint32_t plane2[4];
    for (int x = 0; x < 4; ++x) {
      a[4 + x] = std::rotl(a[4 + x], 1);
      plane2[(x + 2) % 4] = std::rotl(a[8 + x], 8);
    }
    for (int x = 0; x < 4; ++x) a[8 + x] = plane2[x];
  }
}

namespace {

constexpr std::size_t kRate = 16;

class XoodyakHash final : public HashInstance {
 public:
  explicit XoodyakHash(const HashSpec& spec) : HashInstance(spec) {}

  Bytes state() const override {
    Bytes out(48);
    for (int i = 0; i < 12; ++i) StoreLe32(out.data() + 4 * i, s_[i]);
    return out;
  }

 protected:
  void Absorb(ByteView data) override {
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kRate> block) {
      AbsorbBlock(block);
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    AbsorbBlock(buffer_.pending());
    for (std::size_t pos = 0; pos < out.size(); pos += kRate) {
      if (pos > 0) XorByte(0, 0x01);  // Down() of an empty block
      XoodooPermute(s_);
      const Bytes bytes = state();
      std::memcpy(out.data() + pos, bytes.data(),
                  std::min(kRate, out.size() - pos));
    }
  }

 private:
  void AbsorbBlock(ByteView block) {
    if (blocks_ > 0) XoodooPermute(s_);
    for (std::size_t i = 0; i < block.size(); ++i) XorByte(i, block[i]);
    XorByte(block.size(), 0x01);
    // Absorb color on the first block only.
    if (blocks_ == 0) XorByte(47, 0x01);
    ++blocks_;
  }

  void XorByte(std::size_t index, std::uint8_t value) {
    s_[index / 4] ^= static_cast<std::uint32_t>(value) << (8 * (index % 4));
  }

  std::array<std::uint32_t, 12> s_{};
  std::uint64_t blocks_ = 0;
  BlockBuffer<kRate> buffer_{true};
};

}  // namespace

std::unique_ptr<HashInstance> NewXoodyakHash(const HashSpec& spec) {
  return std::make_unique<XoodyakHash>(spec);
}

}  // namespace lwhb::hashkit::internal

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

// PHOTON-Beetle-Hash[32]: the first 16 message bytes initialize the rate
// part of the 256-bit state directly, the rest is absorbed 4 bytes at a
// time through PHOTON-256. A 3-bit constant in the capacity separates
// padded from unpadded final blocks.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

namespace {

constexpr int kRounds = 12;
constexpr int kD = 8;

constexpr std::uint8_t kRc[kRounds] = {1, 3, 7, 14, 13, 11, 6, 12, 9, 2, 5, 10};
constexpr std::uint8_t kIc[kD] = {0, 1, 3, 7, 15, 14, 12, 8};
constexpr std::uint8_t kSbox[16] = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                    0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};
// The serial mixing matrix raised to the 8th power, over GF(2^4) modulo
// x^4 + x + 1.
constexpr std::uint8_t kMix[kD][kD] = {
    {2, 4, 2, 11, 2, 8, 5, 6},       {12, 9, 8, 13, 7, 7, 5, 2},
    {4, 4, 13, 13, 9, 4, 13, 9},     {1, 6, 5, 1, 12, 13, 15, 14},
    {15, 12, 9, 13, 14, 5, 14, 13},  {9, 14, 5, 15, 4, 12, 9, 6},
    {12, 2, 2, 10, 3, 1, 1, 14},     {15, 1, 13, 10, 5, 10, 2, 3},
};

constexpr std::uint8_t GfMul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  for (int i = 0; i < 4; ++i) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0x10) a ^= 0x13;
  }
  return r & 0xF;
}

// kMixMul[i][k][v] = kMix[i][k] * v.
struct MixTable {
  std::uint8_t mul[kD][kD][16];
};

constexpr MixTable MakeMixTable() {
  MixTable t{};
  for (int i = 0; i < kD; ++i) {
    for (int k = 0; k < kD; ++k) {
      for (int v = 0; v < 16; ++v) {
        t.mul[i][k][v] = GfMul(kMix[i][k], static_cast<std::uint8_t>(v));
      }
    }
  }
  return t;
}

constexpr MixTable kMixMul = MakeMixTable();

}  // namespace

void Photon256Permute(std::array<std::uint8_t, 32>& s) {
  // cells[row][col], nibble i of the byte string is cells[i / 8][i % 8],
  // low nibble first.
  std::uint8_t cells[kD][kD];
  for (int i = 0; i < 64; ++i) {
    cells[i / kD][i % kD] = (s[i / 2] >> (4 * (i & 1))) & 0xF;
  }
  for (int r = 0; r < kRounds; ++r) {
    for (int i = 0; i < kD; ++i) cells[i][0] ^= kRc[r] ^ kIc[i];
    for (auto& row : cells) {
      for (auto& cell : row) cell = kSbox[cell];
    }
    for (int i = 1; i < kD; ++i) {
      std::uint8_t tmp[kD];
      for (int j = 0; j < kD; ++j) tmp[j] = cells[i][(j + i) % kD];
      std::memcpy(cells[i], tmp, kD);
    }
    for (int j = 0; j < kD; ++j) {
      std::uint8_t column[kD];
      for (int i = 0; i < kD; ++i) {
        std::uint8_t sum = 0;
        for (int k = 0; k < kD; ++k) sum ^= kMixMul.mul[i][k][cells[k][j]];
        column[i] = sum;
      }
      for (int i = 0; i < kD; ++i) cells[i][j] = column[i];
    }
  }
  for (int i = 0; i < 32; ++i) {
    s[i] = static_cast<std::uint8_t>(cells[(2 * i) / kD][(2 * i) % kD] |
                                     cells[(2 * i + 1) / kD][(2 * i + 1) % kD]
                                         << 4);
  }
}

namespace {

constexpr std::size_t kInitBytes = 16;
constexpr std::size_t kRate = 4;

class PhotonBeetleHash final : public HashInstance {
 public:
  explicit PhotonBeetleHash(const HashSpec& spec) : HashInstance(spec) {}

  Bytes state() const override { return Bytes(s_.begin(), s_.end()); }

 protected:
  void Absorb(ByteView data) override {
    const std::size_t init = std::min(kInitBytes - init_fill_, data.size());
    std::memcpy(s_.data() + init_fill_, data.data(), init);
    init_fill_ += init;
    data = data.subspan(init);
    if (data.empty()) return;
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kRate> block) {
      Photon256Permute(s_);
      for (std::size_t i = 0; i < kRate; ++i) s_[i] ^= block[i];
      ++blocks_;
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    std::uint8_t c0;
    if (init_fill_ == 0) {
      c0 = 1;
    } else if (blocks_ == 0 && buffer_.pending().empty()) {
      // The whole message fits the initial 16 bytes.
      if (init_fill_ < kInitBytes) s_[init_fill_] ^= 0x01;
      c0 = init_fill_ < kInitBytes ? 1 : 2;
    } else {
      const ByteView last = buffer_.pending();
      if (!last.empty()) {
        Photon256Permute(s_);
        for (std::size_t i = 0; i < last.size(); ++i) s_[i] ^= last[i];
        s_[last.size()] ^= 0x01;
      }
      c0 = last.empty() ? 1 : 2;
    }
    s_[31] ^= static_cast<std::uint8_t>(c0 << 5);
    for (std::size_t pos = 0; pos < out.size(); pos += kInitBytes) {
      Photon256Permute(s_);
      std::memcpy(out.data() + pos, s_.data(),
                  std::min(kInitBytes, out.size() - pos));
    }
  }

 private:
  std::array<std::uint8_t, 32> s_{};
  std::size_t init_fill_ = 0;
  std::uint64_t blocks_ = 0;
  BlockBuffer<kRate> buffer_{false};
};

}  // namespace

std::unique_ptr<HashInstance> NewPhotonBeetleHash(const HashSpec& spec) {
  return std::make_unique<PhotonBeetleHash>(spec);
}

}  // namespace lwhb::hashkit::internal

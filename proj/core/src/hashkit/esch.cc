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

// Esch256: a 128-bit rate sponge over Sparkle384. Message blocks are mixed
// in through a Feistel-like injection, followed by 7 steps of Sparkle; the
// last block carries a padding-dependent constant and gets 11 steps.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

namespace {

constexpr std::uint32_t kRcon[8] = {
    0xB7E15162, 0xBF715880, 0x38B4DA56, 0x324E7738,
    0xBB1185EB, 0x4F7C7B57, 0xCFBFA1C8, 0xC2B3293D,
};

constexpr int kBranches = 6;
constexpr int kHalf = kBranches / 2;

inline void Alzette(std::uint32_t& x, std::uint32_t& y, std::uint32_t c) {
  x += std::rotr(y, 31);
  y ^= std::rotr(x, 24);
  x ^= c;
  x += std::rotr(y, 17);
  y ^= std::rotr(x, 17);
  x ^= c;
  x += y;
  y ^= std::rotr(x, 31);
  x ^= c;
  x += std::rotr(y, 24);
  y ^= std::rotr(x, 16);
  x ^= c;
}

inline std::uint32_t Ell(std::uint32_t x) { return std::rotr(x ^ (x << 16), 16); }

}  // namespace

void Sparkle384Permute(std::array<std::uint32_t, 12>& s, int steps) {
  for (int step = 0; step < steps; ++step) {
    s[1] ^= kRcon[step % 8];
    s[3] ^= static_cast<std::uint32_t>(step);
    for (int j = 0; j < kBranches; ++j) Alzette(s[2 * j], s[2 * j + 1], kRcon[j]);
    // Linear layer: Feistel over the two halves of three branches each.
    std::uint32_t tx = 0, ty = 0;
    for (int j = 0; j < kHalf; ++j) {
      tx ^= s[2 * j];
      ty ^= s[2 * j + 1];
    }
    tx = Ell(tx);
    ty = Ell(ty);
    std::array<std::uint32_t, 12> next;
    for (int j = 0; j < kHalf; ++j) {
      const int src = (j + 1) % kHalf;
      next[2 * j] = s[2 * (kHalf + src)] ^ s[2 * src] ^ ty;
      next[2 * j + 1] = s[2 * (kHalf + src) + 1] ^ s[2 * src + 1] ^ tx;
      next[2 * (kHalf + j)] = s[2 * j];
      next[2 * (kHalf + j) + 1] = s[2 * j + 1];
    }
    s = next;
  }
}

namespace {

constexpr std::size_t kRate = 16;
constexpr int kSlimSteps = 7;
constexpr int kBigSteps = 11;

class Esch256 final : public HashInstance {
 public:
  explicit Esch256(const HashSpec& spec) : HashInstance(spec) {}

  Bytes state() const override {
    Bytes out(48);
    for (int i = 0; i < 12; ++i) StoreLe32(out.data() + 4 * i, s_[i]);
    return out;
  }

 protected:
  void Absorb(ByteView data) override {
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kRate> block) {
      Inject(block);
      Sparkle384Permute(s_, kSlimSteps);
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    const ByteView last = buffer_.pending();
    s_[5] ^= (last.size() < kRate ? 1U : 2U) << 24;
    Inject(last);
    Sparkle384Permute(s_, kBigSteps);
    for (std::size_t pos = 0; pos < out.size(); pos += kRate) {
      if (pos > 0) Sparkle384Permute(s_, kSlimSteps);
      std::uint8_t rate[kRate];
      for (int i = 0; i < 4; ++i) StoreLe32(rate + 4 * i, s_[i]);
      std::memcpy(out.data() + pos, rate, std::min(kRate, out.size() - pos));
    }
  }

 private:
  void Inject(ByteView block) {
    std::uint8_t buf[kRate] = {};
    std::memcpy(buf, block.data(), block.size());
    if (block.size() < kRate) buf[block.size()] = 0x80;
    std::uint32_t w[4];
    for (int i = 0; i < 4; ++i) w[i] = LoadLe32(buf + 4 * i);
    const std::uint32_t tx = Ell(w[0] ^ w[2]);
    const std::uint32_t ty = Ell(w[1] ^ w[3]);
    s_[0] ^= w[0] ^ ty;
    s_[1] ^= w[1] ^ tx;
    s_[2] ^= w[2] ^ ty;
    s_[3] ^= w[3] ^ tx;
    s_[4] ^= ty;
    s_[5] ^= tx;
  }

  std::array<std::uint32_t, 12> s_{};
  BlockBuffer<kRate> buffer_{true};
};

}  // namespace

std::unique_ptr<HashInstance> NewEsch256(const HashSpec& spec) {
  return std::make_unique<Esch256>(spec);
}

}  // namespace lwhb::hashkit::internal

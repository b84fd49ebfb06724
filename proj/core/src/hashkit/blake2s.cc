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

// BLAKE2s-256, unkeyed (RFC 7693). The last block is held back until
// finalization so it can be compressed with the final-block flag.

#include "hashkit/internal.h"

namespace lwhb::hashkit::internal {

namespace {

constexpr std::size_t kBlock = 64;

constexpr std::uint32_t kIv[8] = {
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19,
};

constexpr std::uint8_t kSigma[10][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
    {11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4},
    {7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8},
    {9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13},
    {2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9},
    {12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11},
    {13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10},
    {6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5},
    {10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0},
};

inline void G(std::uint32_t* v, int a, int b, int c, int d, std::uint32_t x,
              std::uint32_t y) {
  v[a] = v[a] + v[b] + x;
  v[d] = std::rotr(v[d] ^ v[a], 16);
  v[c] = v[c] + v[d];
  v[b] = std::rotr(v[b] ^ v[c], 12);
  v[a] = v[a] + v[b] + y;
  v[d] = std::rotr(v[d] ^ v[a], 8);
  v[c] = v[c] + v[d];
  v[b] = std::rotr(v[b] ^ v[c], 7);
}

class Blake2s final : public HashInstance {
 public:
  explicit Blake2s(const HashSpec& spec) : HashInstance(spec) {
    std::copy(std::begin(kIv), std::end(kIv), h_.begin());
    // Parameter block: digest length 32, no key, fanout 1, depth 1.
    h_[0] ^= 0x01010000U ^ static_cast<std::uint32_t>(spec.digest_bytes());
  }

  Bytes state() const override {
    Bytes out(32);
    for (int i = 0; i < 8; ++i) StoreLe32(out.data() + 4 * i, h_[i]);
    return out;
  }

 protected:
  void Absorb(ByteView data) override {
    buffer_.Feed(data, [this](std::span<const std::uint8_t, kBlock> block) {
      counter_ += kBlock;
      Compress(block.data(), false);
    });
  }

  void Squeeze(std::span<std::uint8_t> out) override {
    const ByteView last = buffer_.pending();
    std::uint8_t block[kBlock] = {};
    std::memcpy(block, last.data(), last.size());
    counter_ += last.size();
    Compress(block, true);
    const Bytes bytes = state();
    std::memcpy(out.data(), bytes.data(), std::min(out.size(), bytes.size()));
  }

 private:
  void Compress(const std::uint8_t* block, bool last) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) m[i] = LoadLe32(block + 4 * i);
    std::uint32_t v[16];
    for (int i = 0; i < 8; ++i) {
      v[i] = h_[i];
      v[8 + i] = kIv[i];
    }
    v[12] ^= static_cast<std::uint32_t>(counter_);
    v[13] ^= static_cast<std::uint32_t>(counter_ >> 32);
    if (last) v[14] = ~v[14];
    for (const auto& s : kSigma) {
      G(v, 0, 4, 8, 12, m[s[0]], m[s[1]]);
      G(v, 1, 5, 9, 13, m[s[2]], m[s[3]]);
      G(v, 2, 6, 10, 14, m[s[4]], m[s[5]]);
      G(v, 3, 7, 11, 15, m[s[6]], m[s[7]]);
      G(v, 0, 5, 10, 15, m[s[8]], m[s[9]]);
      G(v, 1, 6, 11, 12, m[s[10]], m[s[11]]);
      G(v, 2, 7, 8, 13, m[s[12]], m[s[13]]);
      G(v, 3, 4, 9, 14, m[s[14]], m[s[15]]);
    }
    for (int i = 0; i < 8; ++i) h_[i] ^= v[i] ^ v[8 + i];
  }

  std::array<std::uint32_t, 8> h_{};
  std::uint64_t counter_ = 0;
  BlockBuffer<kBlock> buffer_{true};
};

}  // namespace

std::unique_ptr<HashInstance> NewBlake2s(const HashSpec& spec) {
  return std::make_unique<Blake2s>(spec);
}

}  // namespace lwhb::hashkit::internal

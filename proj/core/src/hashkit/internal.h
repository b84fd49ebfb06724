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

#ifndef LWHB_HASHKIT_INTERNAL_H_
#define LWHB_HASHKIT_INTERNAL_H_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <memory>

#include "lwhb/hashkit/hasher.h"

namespace lwhb::hashkit::internal {

inline std::uint32_t LoadLe32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

inline void StoreLe32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

inline std::uint64_t LoadBe64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
  return v;
}

inline void StoreBe64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

// Splits a byte stream into fixed-size blocks. When `hold_full_block` is
// set, a complete block is only released once more input follows it, so
// the last block of the message (full or partial) is still pending when
// the caller finalizes.
template <std::size_t kBlock>
class BlockBuffer {
 public:
  explicit BlockBuffer(bool hold_full_block) : hold_(hold_full_block) {}

  template <class OnBlock>
  void Feed(ByteView data, OnBlock&& on_block) {
    while (!data.empty()) {
      if (fill_ == kBlock) {
        // Only reachable with hold_: more input has arrived.
        on_block(std::span<const std::uint8_t, kBlock>(buf_));
        fill_ = 0;
      }
      if (fill_ == 0 && !hold_) {
        while (data.size() >= kBlock) {
          on_block(data.template first<kBlock>());
          data = data.subspan(kBlock);
        }
        if (data.empty()) break;
      }
      const std::size_t take = std::min(kBlock - fill_, data.size());
      std::memcpy(buf_.data() + fill_, data.data(), take);
      fill_ += take;
      data = data.subspan(take);
      if (fill_ == kBlock && !hold_) {
        on_block(std::span<const std::uint8_t, kBlock>(buf_));
        fill_ = 0;
      }
    }
  }

  ByteView pending() const { return ByteView(buf_.data(), fill_); }

 private:
  std::array<std::uint8_t, kBlock> buf_{};
  std::size_t fill_ = 0;
  bool hold_;
};

// Core permutations, operating on the reference word layout.
void AsconPermute(std::array<std::uint64_t, 5>& s, int rounds);
void GimliPermute(std::array<std::uint32_t, 12>& s);
void XoodooPermute(std::array<std::uint32_t, 12>& s, int rounds = 12);
void Photon256Permute(std::array<std::uint8_t, 32>& s);
// Words are x0, y0, x1, y1, ... x5, y5.
void Sparkle384Permute(std::array<std::uint32_t, 12>& s, int steps);

std::unique_ptr<HashInstance> NewAsconHash(const HashSpec& spec);
std::unique_ptr<HashInstance> NewGimliHash(const HashSpec& spec);
std::unique_ptr<HashInstance> NewXoodyakHash(const HashSpec& spec);
std::unique_ptr<HashInstance> NewPhotonBeetleHash(const HashSpec& spec);
std::unique_ptr<HashInstance> NewEsch256(const HashSpec& spec);
std::unique_ptr<HashInstance> NewBlake2s(const HashSpec& spec);

}  // namespace lwhb::hashkit::internal

#endif  // LWHB_HASHKIT_INTERNAL_H_

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

#include "lwhb/hashkit/toy.h"

#include <bit>

namespace lwhb::hashkit {

namespace {

constexpr std::uint8_t kSbox[16] = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                    0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

}  // namespace

std::uint8_t ToyPermute8(std::uint8_t state, int rounds) {
  for (int r = 0; r < rounds; ++r) {
    state = static_cast<std::uint8_t>(kSbox[state >> 4] << 4 | kSbox[state & 0xF]);
    state = std::rotl(state, 3);
    state ^= static_cast<std::uint8_t>(0x1D * (r + 1));
  }
  return state;
}

}  // namespace lwhb::hashkit

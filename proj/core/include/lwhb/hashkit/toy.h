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

// An 8-bit permutation built the same way as the real cores (S-box layer,
// rotation, round constant). Small enough to enumerate exhaustively in
// tests; it has no cryptographic value.

#ifndef LWHB_HASHKIT_TOY_H_
#define LWHB_HASHKIT_TOY_H_

#include <cstdint>

namespace lwhb::hashkit {

std::uint8_t ToyPermute8(std::uint8_t state, int rounds = 4);

}  // namespace lwhb::hashkit

#endif  // LWHB_HASHKIT_TOY_H_

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

#ifndef LWHB_HASHKIT_HASHER_H_
#define LWHB_HASHKIT_HASHER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "lwhb/bytes.h"
#include "lwhb/hashkit/spec.h"

namespace lwhb::hashkit {

enum class Phase { kAbsorbing, kSqueezing, kFinalized };

struct Digest {
  Bytes bytes;
  std::string spec_id;

  std::string hex() const { return ToHex(bytes); }
  friend bool operator==(const Digest&, const Digest&) = default;
};

// Running state of one hash computation. Single owner; not thread-safe.
//
// Phases only move forward: Update() is legal while absorbing, Final()
// pads, squeezes and leaves the instance finalized. Anything else throws
// kStateError.
class HashInstance {
 public:
  virtual ~HashInstance() = default;

  HashInstance(const HashInstance&) = delete;
  HashInstance& operator=(const HashInstance&) = delete;

  const HashSpec& spec() const { return spec_; }
  Phase phase() const { return phase_; }
  std::uint64_t absorbed_bytes() const { return absorbed_bytes_; }

  // Serialized construction state, always spec().state_bytes() long. Byte
  // order follows the function's reference implementation.
  virtual Bytes state() const = 0;

  void Update(ByteView data);
  Digest Final();

 protected:
  explicit HashInstance(const HashSpec& spec) : spec_(spec) {}

  virtual void Absorb(ByteView data) = 0;
  // Pads the pending input and writes spec().digest_bytes() of output.
  virtual void Squeeze(std::span<std::uint8_t> out) = 0;

 private:
  const HashSpec& spec_;
  Phase phase_ = Phase::kAbsorbing;
  std::uint64_t absorbed_bytes_ = 0;
};

// Throws kNotImplemented for unknown or registry-only ids.
std::unique_ptr<HashInstance> NewHashInstance(std::string_view spec_id);

Digest Hash(std::string_view spec_id, ByteView message);

Digest HashStreaming(std::string_view spec_id,
                     std::span<const ByteView> chunks);

// Applies the function's core permutation to a serialized state of
// spec.state_bytes(). BLAKE2s has no standalone permutation (its core is a
// compression function) and reports kNotImplemented.
Bytes Permute(std::string_view spec_id, ByteView state);

// Multi-rate padding of a final partial block: the input, then
// `domain_byte`, then zeros up to `rate_bytes`. Requires
// block.size() < rate_bytes.
Bytes Pad10Star(ByteView block, std::size_t rate_bytes,
                std::uint8_t domain_byte = 0x01);

}  // namespace lwhb::hashkit

#endif  // LWHB_HASHKIT_HASHER_H_

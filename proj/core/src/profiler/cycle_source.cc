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

#include "lwhb/profiler/cycle_source.h"

#include <chrono>
#include <cmath>
#include <string>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define LWHB_HAVE_RDTSC 1
#endif

#include "lwhb/error.h"

namespace lwhb::profiler {

std::string_view CycleSourceKindName(CycleSourceKind kind) {
  switch (kind) {
    case CycleSourceKind::kHostCounter:
      return "host-counter";
    case CycleSourceKind::kMonotonicClockScaled:
      return "monotonic-clock";
    case CycleSourceKind::kScripted:
      return "scripted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class HostCounter final : public CycleSource {
 public:
  CycleSourceKind kind() const override {
    return CycleSourceKind::kHostCounter;
  }
  double frequency_hz() const override { return 0.0; }

  void Begin() override { start_ = Read(); }
  std::uint64_t End() override { return Read() - start_; }

 private:
  static std::uint64_t Read() {
#ifdef LWHB_HAVE_RDTSC
    unsigned aux;
    return __rdtscp(&aux);
#else
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            Clock::now().time_since_epoch())
            .count());
#endif
  }

  std::uint64_t start_ = 0;
};

class MonotonicClockScaled final : public CycleSource {
 public:
  explicit MonotonicClockScaled(double frequency_hz)
      : frequency_hz_(frequency_hz) {}

  CycleSourceKind kind() const override {
    return CycleSourceKind::kMonotonicClockScaled;
  }
  double frequency_hz() const override { return frequency_hz_; }

  void Begin() override { start_ = Clock::now(); }
  std::uint64_t End() override {
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    return static_cast<std::uint64_t>(
        std::llround(elapsed.count() * frequency_hz_));
  }

 private:
  double frequency_hz_;
  Clock::time_point start_{};
};

class Scripted final : public CycleSource {
 public:
  Scripted(std::vector<std::uint64_t> cycles, double frequency_hz)
      : cycles_(std::move(cycles)), frequency_hz_(frequency_hz) {}

  CycleSourceKind kind() const override { return CycleSourceKind::kScripted; }
  double frequency_hz() const override { return frequency_hz_; }

  void Begin() override {}
  std::uint64_t End() override {
    const std::uint64_t value = cycles_[next_];
    next_ = (next_ + 1) % cycles_.size();
    return value;
  }

 private:
  std::vector<std::uint64_t> cycles_;
  double frequency_hz_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<CycleSource> NewHostCounter() {
  return std::make_unique<HostCounter>();
}

std::unique_ptr<CycleSource> NewMonotonicClockScaled(double frequency_hz) {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    ThrowInvalidArgument("clock frequency must be positive");
  }
  return std::make_unique<MonotonicClockScaled>(frequency_hz);
}

std::unique_ptr<CycleSource> NewScripted(std::vector<std::uint64_t> cycles,
                                         double frequency_hz) {
  if (cycles.empty()) ThrowInvalidArgument("scripted cycle sequence is empty");
  if (frequency_hz < 0.0) ThrowInvalidArgument("frequency must not be negative");
  return std::make_unique<Scripted>(std::move(cycles), frequency_hz);
}

}  // namespace lwhb::profiler

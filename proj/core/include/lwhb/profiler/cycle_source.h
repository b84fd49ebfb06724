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

// Cycle counters for the cycles-per-byte profiler.
//
// A source is reset ("initialized and set to zero") right before the timed
// region with Begin() and read right after it with End(). Host sources read
// real hardware or clock time; the scripted source replays a fixed sequence
// and makes measurements fully deterministic.

#ifndef LWHB_PROFILER_CYCLE_SOURCE_H_
#define LWHB_PROFILER_CYCLE_SOURCE_H_

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace lwhb::profiler {

enum class CycleSourceKind { kHostCounter, kMonotonicClockScaled, kScripted };

// Stable lowercase label used in CSV output ("host-counter", ...).
std::string_view CycleSourceKindName(CycleSourceKind kind);

class CycleSource {
 public:
  virtual ~CycleSource() = default;

  virtual CycleSourceKind kind() const = 0;
  // Nominal counting frequency; 0 when unknown (raw host counter).
  virtual double frequency_hz() const = 0;

  virtual void Begin() = 0;
  // Cycles elapsed since the matching Begin().
  virtual std::uint64_t End() = 0;
};

// Time-stamp counter where the CPU exposes one, otherwise nanoseconds of
// the monotonic clock.
std::unique_ptr<CycleSource> NewHostCounter();

// Monotonic clock time converted to cycles of a nominal clock, e.g. the
// 7.3728 MHz target clock. frequency_hz must be positive.
std::unique_ptr<CycleSource> NewMonotonicClockScaled(double frequency_hz);

// Returns cycles[0], cycles[1], ... from successive End() calls and wraps
// around. The sequence must be nonempty.
std::unique_ptr<CycleSource> NewScripted(std::vector<std::uint64_t> cycles,
                                         double frequency_hz = 0.0);

}  // namespace lwhb::profiler

#endif  // LWHB_PROFILER_CYCLE_SOURCE_H_

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

#include "lwhb/energymodel/energy.h"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "lwhb/error.h"
#include "lwhb/format.h"

namespace lwhb::energymodel {

namespace {

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    ThrowInvalidArgument(std::string(name) + " must be positive, got " +
                         FormatNumber(value));
  }
}

// Value as printed with 6 significant digits, so JSON output is stable.
double Rounded(double value) { return std::stod(FormatNumber(value)); }

}  // namespace

void CaptureConfig::Validate() const {
  RequirePositive(v_adc_ref, "ADC reference voltage");
  RequirePositive(gain_factor, "gain factor");
  RequirePositive(r_shunt, "shunt resistance");
  RequirePositive(v_sup, "supply voltage");
  RequirePositive(f_clk, "clock frequency");
}

double GainFromDecibels(double db) {
  if (!std::isfinite(db)) ThrowInvalidArgument("gain in dB must be finite");
  return std::pow(10.0, db / 20.0);
}

double ToActualVoltage(double sample, const CaptureConfig& config) {
  if (!(sample >= kMinSample && sample <= kMaxSample)) {
    ThrowInvalidArgument("sample " + FormatNumber(sample) +
                         " outside the normalized range [-0.5, 0.5]");
  }
  return sample * config.v_adc_ref / config.gain_factor;
}

double InstantaneousPower(double sample, const CaptureConfig& config) {
  return ToActualVoltage(sample, config) / config.r_shunt * config.v_sup;
}

double RmsPower(const PowerTrace& trace) {
  if (trace.samples.empty()) ThrowInvalidArgument("empty power trace");
  trace.config.Validate();
  // Neumaier-compensated sum of squares.
  double sum = 0.0;
  double compensation = 0.0;
  for (double s : trace.samples) {
    const double p = InstantaneousPower(s, trace.config);
    const double term = p * p;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return std::sqrt((sum + compensation) /
                   static_cast<double>(trace.samples.size()));
}

double ExecutionTime(double cycles, const CaptureConfig& config) {
  if (!(cycles >= 0.0) || !std::isfinite(cycles)) {
    ThrowInvalidArgument("cycle count must be a nonnegative number");
  }
  RequirePositive(config.f_clk, "clock frequency");
  return cycles / config.f_clk;
}

EnergyResult Energy(const PowerTrace& trace, double cycles) {
  EnergyResult r;
  r.p_rms_watts = RmsPower(trace);
  r.t_exec_seconds = ExecutionTime(cycles, trace.config);
  r.energy_joules = r.p_rms_watts * r.t_exec_seconds;
  r.energy_nj = r.energy_joules * 1e9;
  r.n_samples = trace.samples.size();
  return r;
}

std::string FormatEnergyJson(const EnergyResult& result) {
  nlohmann::ordered_json j;
  j["p_rms_w"] = Rounded(result.p_rms_watts);
  j["t_exec_s"] = Rounded(result.t_exec_seconds);
  j["energy_j"] = Rounded(result.energy_joules);
  j["energy_nj"] = Rounded(result.energy_nj);
  j["n_samples"] = result.n_samples;
  return j.dump() + "\n";
}

}  // namespace lwhb::energymodel

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

// Energy per hash execution from a normalized ADC power trace.
//
//   V_actual = sample * V_ref / gain
//   P        = V_actual / R_shunt * V_sup
//   P_rms    = sqrt(mean(P^2))
//   T_exec   = cycles / f_clk
//   E        = P_rms * T_exec

#ifndef LWHB_ENERGYMODEL_ENERGY_H_
#define LWHB_ENERGYMODEL_ENERGY_H_

#include <cstddef>
#include <string>
#include <vector>

namespace lwhb::energymodel {

struct CaptureConfig {
  double v_adc_ref = 1.0;      // volts
  double gain_factor = 5.0;    // linear amplifier gain
  double r_shunt = 49.9;       // ohms
  double v_sup = 3.3;          // volts
  double f_clk = 7'372'800.0;  // hertz

  // Throws kInvalidArgument unless every field is positive and finite.
  void Validate() const;
};

// Linear gain for an amplifier specified in decibels: 10^(db/20).
double GainFromDecibels(double db);

inline constexpr double kMinSample = -0.5;
inline constexpr double kMaxSample = 0.5;

struct PowerTrace {
  std::vector<double> samples;
  CaptureConfig config;
};

// Throws kInvalidArgument for samples outside [-0.5, 0.5] (or NaN).
double ToActualVoltage(double sample, const CaptureConfig& config);

double InstantaneousPower(double sample, const CaptureConfig& config);

// Throws kInvalidArgument for an empty trace.
double RmsPower(const PowerTrace& trace);

// Throws kInvalidArgument for negative or non-finite cycle counts.
double ExecutionTime(double cycles, const CaptureConfig& config);

struct EnergyResult {
  double p_rms_watts = 0.0;
  double t_exec_seconds = 0.0;
  double energy_joules = 0.0;
  double energy_nj = 0.0;
  std::size_t n_samples = 0;
};

EnergyResult Energy(const PowerTrace& trace, double cycles);

// {"p_rms_w":..,"t_exec_s":..,"energy_j":..,"energy_nj":..,"n_samples":..}
// with 6 significant digits.
std::string FormatEnergyJson(const EnergyResult& result);

}  // namespace lwhb::energymodel

#endif  // LWHB_ENERGYMODEL_ENERGY_H_

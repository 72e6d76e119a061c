// Copyright 2026 The minlen-thermo Authors.
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

#include "minlen/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "minlen/error.hpp"

namespace minlen {

namespace {

double sqrt_denominator(const DeformationParams& params) {
  const double sb = std::sqrt(params.beta);
  const double sum = sb + std::sqrt(params.beta + params.beta_prime);
  return sb * sum * sum;
}

void require_deformation(const DeformationParams& params) {
  params.validate();
  if (!(params.beta > 0.0)) {
    throw ZeroDeformation("high-temperature limit requires beta > 0");
  }
}

}  // namespace

ExpansionResult low_t_correction_factor(const DeformationParams& params,
                                        double mass, double temperature) {
  params.validate();
  const double slope = 3.0 * params.beta + params.beta_prime;
  const double validity = params.beta * mass * temperature;
  return {1.0 - 3.0 * slope * mass * temperature, Regime::low_temperature,
          validity, validity <= kLowRegimeLimit};
}

ExpansionResult low_t_heat_capacity(const SystemModel& system,
                                    const DeformationParams& params,
                                    double temperature) {
  validate(system);
  params.validate();
  double c0 = 0.0;
  double mass = 0.0;
  if (const auto* gas = std::get_if<IdealGas>(&system)) {
    c0 = 1.5;
    mass = gas->mass;
  } else if (const auto* osc = std::get_if<Oscillator>(&system)) {
    c0 = 3.0;
    mass = osc->mass;
  } else {
    throw InvalidArgument("low-T heat capacity is defined for the ideal gas "
                          "and the oscillator only");
  }
  const double slope = 3.0 * params.beta + params.beta_prime;
  const double validity = params.beta * mass * temperature;
  return {c0 - 6.0 * slope * mass * temperature, Regime::low_temperature,
          validity, validity <= kLowRegimeLimit};
}

IdealGasHighT high_t_ideal_gas(const DeformationParams& params, double mass,
                               double volume) {
  require_deformation(params);
  if (!(mass > 0.0) || !(volume > 0.0)) {
    throw InvalidArgument("mass and volume must be positive");
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double sb = std::sqrt(params.beta);
  const double sbb = std::sqrt(params.beta + params.beta_prime);
  IdealGasHighT out;
  out.z_limit = volume * pi2 / sqrt_denominator(params);
  out.energy_plateau = (2.0 * sb + sbb) / (2.0 * mass * params.beta * sbb);
  return out;
}

double high_t_oscillator(const DeformationParams& params, double mass,
                         double omega) {
  require_deformation(params);
  if (!(mass > 0.0) || !(omega > 0.0)) {
    throw InvalidArgument("mass and omega must be positive");
  }
  const double pi = std::numbers::pi;
  return std::pow(2.0 * pi / (mass * omega * omega), 1.5) * pi * pi /
         sqrt_denominator(params);
}

double freezing_prediction(const PowerLaw& system) {
  validate(system);
  if (system.growth == 0.0) return system.dimension / system.exponent;
  if (2.0 * system.growth >= system.dimension) return 0.0;
  throw InvalidArgument(
      "no closed prediction for 0 < 2 * growth < dimension");
}

}  // namespace minlen

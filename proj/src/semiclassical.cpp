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

#include "minlen/semiclassical.hpp"

#include <cmath>
#include <numbers>

#include "minlen/error.hpp"

namespace minlen {

namespace {

struct ValidateVisitor {
  void operator()(const IdealGas& g) const {
    if (!(g.volume > 0.0)) throw InvalidArgument("volume must be positive");
    if (!(g.mass > 0.0)) throw InvalidArgument("mass must be positive");
    if (!(g.particles > 0.0)) {
      throw InvalidArgument("particle count must be positive");
    }
  }
  void operator()(const Oscillator& o) const {
    if (!(o.mass > 0.0)) throw InvalidArgument("mass must be positive");
    if (!(o.omega > 0.0)) throw InvalidArgument("omega must be positive");
    if (!(o.particles > 0.0)) {
      throw InvalidArgument("particle count must be positive");
    }
  }
  void operator()(const PowerLaw& p) const {
    if (!(p.alpha > 0.0)) throw InvalidArgument("alpha must be positive");
    if (!(p.exponent > 0.0)) throw InvalidArgument("exponent must be positive");
    if (p.dimension < 1) throw InvalidArgument("dimension must be positive");
    if (!(p.growth >= 0.0)) {
      throw InvalidArgument("Jacobian growth must be nonnegative");
    }
  }
};

void check_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("temperature must be positive and finite");
  }
}

// Momentum-space Hamiltonian, Jacobian and dimension of a model.
struct MomentumModel {
  RadialFn hamiltonian;
  RadialFn jacobian;
  int dimension;
};

MomentumModel kinetic_model(double mass, const DeformationParams& params) {
  return {[mass](double p) { return p * p / (2.0 * mass); },
          [params](double p) { return kempf_jacobian(params, p * p, 3); }, 3};
}

MomentumModel momentum_model(const SystemModel& system,
                             const DeformationParams& params) {
  if (const auto* gas = std::get_if<IdealGas>(&system)) {
    return kinetic_model(gas->mass, params);
  }
  if (const auto* osc = std::get_if<Oscillator>(&system)) {
    return kinetic_model(osc->mass, params);
  }
  const auto& law = std::get<PowerLaw>(system);
  const double beta = params.beta;
  return {[law](double p) { return law.alpha * std::pow(p, law.exponent); },
          [law, beta](double p) {
            return std::pow(1.0 + beta * p * p, law.growth);
          },
          law.dimension};
}

// Coordinate integral of exp(-U/T).
double coordinate_z(const SystemModel& system, double temperature) {
  if (const auto* gas = std::get_if<IdealGas>(&system)) return gas->volume;
  if (const auto* osc = std::get_if<Oscillator>(&system)) {
    return std::pow(2.0 * std::numbers::pi * temperature /
                        (osc->mass * osc->omega * osc->omega),
                    1.5);
  }
  return 1.0;
}

double momentum_z(const MomentumModel& model, double temperature,
                  const QuadratureSettings& settings) {
  const double radial_power = model.dimension - 1;
  auto weight = [&](double p) {
    const double boltzmann = std::exp(-model.hamiltonian(p) / temperature);
    if (boltzmann == 0.0) return 0.0;
    return std::pow(p, radial_power) * boltzmann / model.jacobian(p);
  };
  // Substitution scale at the thermal momentum, where H = T.
  double scale = 1.0;
  while (model.hamiltonian(scale) < temperature && scale < 1e150) scale *= 2.0;
  while (model.hamiltonian(scale) > temperature && scale > 1e-150) scale *= 0.5;
  return radial_integral(weight, settings, scale).value;
}

}  // namespace

void validate(const SystemModel& system) {
  std::visit(ValidateVisitor{}, system);
}

double classical_z1(const SystemModel& system, const DeformationParams& params,
                    double temperature, const QuadratureSettings& settings) {
  validate(system);
  params.validate();
  check_temperature(temperature);
  const MomentumModel model = momentum_model(system, params);
  return coordinate_z(system, temperature) *
         unit_sphere_area(model.dimension) *
         momentum_z(model, temperature, settings);
}

ThermoPoint classical_thermo(const SystemModel& system,
                             const DeformationParams& params,
                             double temperature,
                             const QuadratureSettings& settings) {
  validate(system);
  params.validate();
  check_temperature(temperature);
  const MomentumModel model = momentum_model(system, params);
  const Moments kinetic =
      boltzmann_moments(model.hamiltonian, model.jacobian, model.dimension,
                        temperature, settings);

  ThermoPoint point;
  point.temperature = temperature;
  point.method = Method::classical;
  point.z1 = coordinate_z(system, temperature) * kinetic.weight;
  point.energy_per_particle = kinetic.mean;
  point.heat_capacity_per_particle = heat_capacity_from_moments(
      kinetic.mean, kinetic.second(), temperature);
  if (std::holds_alternative<Oscillator>(system)) {
    // The Gaussian potential contributes <U> = 3T/2 and var(U) = 3T^2/2,
    // independent of the momentum part.
    point.energy_per_particle += 1.5 * temperature;
    point.heat_capacity_per_particle += 1.5;
  }
  return point;
}

double power_law_radial_z(const PowerLaw& system,
                          const DeformationParams& params, double temperature,
                          const QuadratureSettings& settings) {
  validate(system);
  params.validate();
  check_temperature(temperature);
  return momentum_z(momentum_model(system, params), temperature, settings);
}

double pressure(const IdealGas& gas, const DeformationParams& params,
                double temperature) {
  validate(gas);
  params.validate();
  check_temperature(temperature);
  return gas.particles * temperature / gas.volume;
}

double pressure_numeric(const IdealGas& gas, const DeformationParams& params,
                        double temperature,
                        const QuadratureSettings& settings) {
  validate(gas);
  auto log_z = [&](double volume) {
    IdealGas shifted = gas;
    shifted.volume = volume;
    return std::log(classical_z1(shifted, params, temperature, settings));
  };
  auto central = [&](double h) {
    return (log_z(gas.volume + h) - log_z(gas.volume - h)) / (2.0 * h);
  };
  const double h = 1e-3 * gas.volume;
  const double derivative = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  return gas.particles * temperature * derivative;
}

double freezing_limit(const PowerLaw& system, const DeformationParams& params,
                      double temperature, const QuadratureSettings& settings) {
  return classical_thermo(system, params, temperature, settings)
      .heat_capacity_per_particle;
}

}  // namespace minlen

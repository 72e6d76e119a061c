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

#ifndef MINLEN_SEMICLASSICAL_HPP
#define MINLEN_SEMICLASSICAL_HPP

#include <variant>

#include "minlen/deformation.hpp"
#include "minlen/numerics.hpp"
#include "minlen/thermo_point.hpp"

namespace minlen {

// N free particles of mass m in a box of volume V, H = P^2 / 2m.
struct IdealGas {
  double volume = 1.0;
  double particles = 1.0;
  double mass = 1.0;
};

// N isotropic 3D oscillators, H = P^2 / 2m + m omega^2 X^2 / 2.
struct Oscillator {
  double mass = 1.0;
  double omega = 1.0;
  double particles = 1.0;
};

// Large-momentum model H = alpha P^n in D dimensions with Jacobian
// J = (1 + beta P^2)^growth, i.e. J ~ beta^growth P^(2 growth) for large P.
// Only beta of the deformation parameters is used.
struct PowerLaw {
  double alpha = 1.0;
  double exponent = 2.0;
  int dimension = 3;
  double growth = 0.0;
};

using SystemModel = std::variant<IdealGas, Oscillator, PowerLaw>;

// Throws InvalidArgument on nonpositive physical parameters.
void validate(const SystemModel& system);

// One-particle partition function int exp(-H/T) dX dP / J without the
// (2 pi hbar)^D normalisation. The coordinate integral is analytic (V for
// the gas, (2 pi T / m omega^2)^(3/2) for the oscillator, 1 for the power
// law); the momentum integral is numerical.
double classical_z1(const SystemModel& system, const DeformationParams& params,
                    double temperature, const QuadratureSettings& settings = {});

ThermoPoint classical_thermo(const SystemModel& system,
                             const DeformationParams& params,
                             double temperature,
                             const QuadratureSettings& settings = {});

// int_0^inf P^(D-1) exp(-alpha P^n / T) / (1 + beta P^2)^growth dP, the
// momentum integral without the angular factor.
double power_law_radial_z(const PowerLaw& system,
                          const DeformationParams& params, double temperature,
                          const QuadratureSettings& settings = {});

// p = N T d(ln Z1)/dV = N T / V.
double pressure(const IdealGas& gas, const DeformationParams& params,
                double temperature);

// Same quantity from a Richardson-extrapolated central difference of
// ln Z1 in V, with Z1 evaluated numerically.
double pressure_numeric(const IdealGas& gas, const DeformationParams& params,
                        double temperature,
                        const QuadratureSettings& settings = {});

// Heat capacity per particle of the power-law model at a large temperature.
double freezing_limit(const PowerLaw& system, const DeformationParams& params,
                      double temperature,
                      const QuadratureSettings& settings = {});

}  // namespace minlen

#endif  // MINLEN_SEMICLASSICAL_HPP

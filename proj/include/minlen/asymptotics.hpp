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

#ifndef MINLEN_ASYMPTOTICS_HPP
#define MINLEN_ASYMPTOTICS_HPP

#include "minlen/deformation.hpp"
#include "minlen/semiclassical.hpp"

namespace minlen {

enum class Regime { low_temperature, high_temperature };

// Leading-order asymptotic value. validity is beta m T; in_regime is false
// (a warning, not an error) when it falls outside the regime window.
struct ExpansionResult {
  double value = 0.0;
  Regime regime = Regime::low_temperature;
  double validity = 0.0;
  bool in_regime = true;
};

inline constexpr double kLowRegimeLimit = 0.1;
inline constexpr double kHighRegimeLimit = 10.0;

// Z / Z0 = 1 - 3 (3 beta + beta') m T.
ExpansionResult low_t_correction_factor(const DeformationParams& params,
                                        double mass, double temperature);

// C / N = C0 / N - 6 (3 beta + beta') m T with C0 / N = 3/2 for the ideal
// gas and 3 for the oscillator. PowerLaw is rejected.
ExpansionResult low_t_heat_capacity(const SystemModel& system,
                                    const DeformationParams& params,
                                    double temperature);

struct IdealGasHighT {
  double z_limit = 0.0;     // V pi^2 / (sqrt(b) (sqrt(b) + sqrt(b + b'))^2)
  double energy_plateau = 0.0;  // per particle
};

// T -> infinity limits of the deformed ideal gas. Throws ZeroDeformation
// for beta = 0.
IdealGasHighT high_t_ideal_gas(const DeformationParams& params, double mass,
                               double volume);

// Prefactor A with Z1 ~ A T^(3/2) for the deformed oscillator at high T.
// Throws ZeroDeformation for beta = 0.
double high_t_oscillator(const DeformationParams& params, double mass,
                         double omega);

// Large-T heat capacity of the power-law model: D / n when the Jacobian
// does not grow (growth = 0), zero when 2 growth >= D. Other growth classes
// have no closed prediction and throw InvalidArgument.
double freezing_prediction(const PowerLaw& system);

}  // namespace minlen

#endif  // MINLEN_ASYMPTOTICS_HPP

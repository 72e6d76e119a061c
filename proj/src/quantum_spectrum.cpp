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

#include "minlen/quantum_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "minlen/error.hpp"

namespace minlen {

void OscillatorQuantumParams::validate() const {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  if (!(beta >= 0.0) || !(beta_prime >= 0.0)) {
    throw InvalidArgument("deformation parameters must be nonnegative");
  }
}

double energy_nl(const OscillatorQuantumParams& params, int n, int l) {
  if (n < 0 || l < 0 || l > n || (n - l) % 2 != 0) {
    std::ostringstream msg;
    msg << "invalid quantum numbers n=" << n << " l=" << l;
    throw InvalidQuantumNumber(msg.str());
  }
  const double b = params.beta;
  const double bp = params.beta_prime;
  const double mwh = params.mass * params.omega * params.hbar;
  const double nu = n + 1.5;
  const double ll = static_cast<double>(l) * (l + 1);
  const double root =
      std::sqrt(1.0 + mwh * mwh * (b * b * ll + 0.25 * (3.0 * b + bp) *
                                                     (3.0 * b + bp)));
  const double quadratic =
      0.5 * mwh * ((b + bp) * nu * nu + (b - bp) * (ll + 2.25) + 1.5 * bp);
  return params.hbar * params.omega * (nu * root + quadratic);
}

LevelIterator::LevelIterator(const OscillatorQuantumParams& params)
    : params_(params) {
  params_.validate();
  double previous = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < kCheckWindow; ++n) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int l = n % 2; l <= n; l += 2) {
      lowest = std::min(lowest, energy_nl(params_, n, l));
    }
    if (lowest < previous) {
      throw Error("oscillator shell minima are not nondecreasing in n");
    }
    previous = lowest;
  }
}

std::vector<SpectrumLevel> LevelIterator::next_shell() {
  std::vector<SpectrumLevel> shell;
  shell.reserve(static_cast<std::size_t>(n_ / 2 + 1));
  for (int l = n_; l >= 0; l -= 2) {
    const double e = energy_nl(params_, n_, l);
    if (!(e > 0.0)) {
      std::ostringstream msg;
      msg << "nonpositive energy " << e << " at n=" << n_ << " l=" << l;
      throw Error(msg.str());
    }
    shell.push_back({n_, l, e, 2 * l + 1});
  }
  ++n_;
  return shell;
}

ShellSource LevelIterator::shell_source() const {
  auto iter = std::make_shared<LevelIterator>(*this);
  return [iter]() -> std::optional<LevelShell> {
    LevelShell shell;
    for (const SpectrumLevel& level : iter->next_shell()) {
      shell.push_back({level.energy, static_cast<double>(level.degeneracy)});
    }
    return shell;
  };
}

ThermoPoint quantum_thermo(const OscillatorQuantumParams& params,
                           double temperature, const SeriesSettings& settings) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("temperature must be positive and finite");
  }
  const LevelIterator levels(params);
  const SeriesResult sum =
      sum_levels(levels.shell_source(), temperature, settings);
  ThermoPoint point;
  point.temperature = temperature;
  point.method = Method::quantum;
  point.z1 = sum.moments.weight;
  point.energy_per_particle = sum.moments.mean;
  point.heat_capacity_per_particle =
      sum.moments.variance / (temperature * temperature);
  return point;
}

}  // namespace minlen

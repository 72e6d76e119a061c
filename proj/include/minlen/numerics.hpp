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

#ifndef MINLEN_NUMERICS_HPP
#define MINLEN_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace minlen {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  void validate() const;
};

struct SeriesSettings {
  double tail_rel_tol = 1e-12;
  std::size_t max_terms = 100'000'000;
  // Number of leading shells allowed to break energy monotonicity.
  std::size_t monotone_prefix = 16;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

using RadialFn = std::function<double(double)>;

// Integral of f over [0, inf) through the substitution u = P / (scale + P)
// and globally adaptive 7/15-point Gauss-Kronrod panels on [0, 1). Throws
// NonConvergence (carrying the residual estimate) when max_subdivisions is
// exhausted.
QuadratureResult radial_integral(const RadialFn& f,
                                 const QuadratureSettings& settings = {},
                                 double scale = 1.0);

// Surface area of the unit sphere in D dimensions, 2 pi^(D/2) / Gamma(D/2).
double unit_sphere_area(int dimension);

struct Moments {
  double weight = 0.0;    // normalisation (Z_p or Z)
  double mean = 0.0;      // <E>
  double variance = 0.0;  // <(E - <E>)^2>

  double second() const { return variance + mean * mean; }
};

// Momentum-space Boltzmann moments of an isotropic Hamiltonian H(|P|) with
// Jacobian J(|P|):
//   Z_p = S_D int P^(D-1) exp(-H/T) / J dP
// together with <H> and the variance of H. The substitution scale defaults
// to the momentum where H = T.
Moments boltzmann_moments(const RadialFn& hamiltonian, const RadialFn& jacobian,
                          int dimension, double temperature,
                          const QuadratureSettings& settings = {},
                          std::optional<double> momentum_scale = std::nullopt);

struct Level {
  double energy = 0.0;
  double degeneracy = 1.0;
};

// A group of levels summed as one unit for tail control; the quantum
// oscillator passes every (n, l) of one principal number n.
using LevelShell = std::vector<Level>;

// Produces the next shell, or nullopt when the spectrum is exhausted.
using ShellSource = std::function<std::optional<LevelShell>()>;

struct SeriesResult {
  Moments moments;  // weight is Z
  std::size_t terms = 0;
  double tail_bound = 0.0;  // bound on the omitted relative weight
};

// Canonical sum Z = sum g exp(-E/T) with the mean and variance of E.
// Stops once the geometric bound on the remaining shells drops below
// tail_rel_tol of the partial sum. The ratio is the larger of the last two
// shell-to-shell ratios of G_n exp(-Emin_n / T), where G_n is the shell's
// total degeneracy; valid while those ratios keep decreasing, which holds
// for spectra growing at least linearly in n.
SeriesResult sum_levels(const ShellSource& shells, double temperature,
                        const SeriesSettings& settings = {});

// Finite list of levels, each treated as its own shell.
SeriesResult sum_levels(std::span<const Level> levels, double temperature,
                        const SeriesSettings& settings = {});

// (<E^2> - <E>^2) / T^2. Throws NegativeVariance when the variance is below
// -tolerance * <E^2>; smaller negative values are clamped to zero.
double heat_capacity_from_moments(double mean_energy, double mean_energy_sq,
                                  double temperature,
                                  double tolerance = 1e-10);

}  // namespace minlen

#endif  // MINLEN_NUMERICS_HPP

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

// Independent reference computations used only by the test suites. None of
// these routines call into the library's numerical paths.

#ifndef MINLEN_TESTS_ORACLES_HPP
#define MINLEN_TESTS_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// Determinant of an n x n row-major matrix by Gaussian elimination with
// partial pivoting.
double determinant(std::vector<double> a, std::size_t n);

// Undeformed 3D oscillator: Z = (2 sinh(hw / 2T))^-3, Einstein energy and
// heat capacity per oscillator.
double oscillator_z(double hbar_omega, double temperature);
double einstein_energy(double hbar_omega, double temperature);
double einstein_heat_capacity(double hbar_omega, double temperature);

// Richardson-extrapolated central difference of f at x with step h.
double derivative(const std::function<double(double)>& f, double x, double h);

// Composite Simpson rule on [a, b] with an even number of panels.
double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t panels);

// Classical Kempf momentum moments by Simpson on a truncated range:
// returns {Z_p, <H>, var(H)} for H = P^2 / 2m, D = 3, P <= cutoff.
struct KineticMoments {
  double z;
  double mean;
  double variance;
};
KineticMoments kempf_kinetic_moments(double beta, double beta_prime,
                                     double mass, double temperature,
                                     std::size_t panels = 200000);

}  // namespace oracle

#endif  // MINLEN_TESTS_ORACLES_HPP

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

#ifndef MINLEN_QUANTUM_SPECTRUM_HPP
#define MINLEN_QUANTUM_SPECTRUM_HPP

#include <vector>

#include "minlen/numerics.hpp"
#include "minlen/thermo_point.hpp"

namespace minlen {

struct OscillatorQuantumParams {
  double mass = 0.5;
  double omega = 1.0;
  double hbar = 1.0;
  double beta = 0.0;
  double beta_prime = 0.0;

  void validate() const;
};

// One (n, l) multiplet of the 3D oscillator; n = 2 n_r + l.
struct SpectrumLevel {
  int n = 0;
  int l = 0;
  double energy = 0.0;
  int degeneracy = 1;  // 2l + 1
};

// Exact energy of the deformed isotropic oscillator,
//   E_nl = hbar omega [ (n + 3/2) sqrt(1 + (m omega hbar)^2 (beta^2 l(l+1)
//          + (3 beta + beta')^2 / 4))
//        + (m omega hbar / 2) ((beta + beta') (n + 3/2)^2
//          + (beta - beta') (l(l+1) + 9/4) + 3 beta' / 2) ].
// Throws InvalidQuantumNumber unless 0 <= l <= n and l = n (mod 2).
double energy_nl(const OscillatorQuantumParams& params, int n, int l);

// Walks the spectrum shell by shell: n = 0, 1, 2, ... and within each n
// l = n, n-2, ..., down to 1 or 0.
class LevelIterator {
 public:
  // Verifies that the minimum energy of each shell is nondecreasing over
  // the first kCheckWindow shells.
  explicit LevelIterator(const OscillatorQuantumParams& params);

  static constexpr int kCheckWindow = 64;

  std::vector<SpectrumLevel> next_shell();
  int next_n() const { return n_; }

  // Adapter for sum_levels; the source keeps its own copy of the iterator.
  ShellSource shell_source() const;

 private:
  OscillatorQuantumParams params_;
  int n_ = 0;
};

// Canonical sum over the exact spectrum. E and C are per oscillator.
ThermoPoint quantum_thermo(const OscillatorQuantumParams& params,
                           double temperature,
                           const SeriesSettings& settings = {});

}  // namespace minlen

#endif  // MINLEN_QUANTUM_SPECTRUM_HPP

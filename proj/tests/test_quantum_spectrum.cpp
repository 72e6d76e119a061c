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

#include <doctest.h>

#include <cmath>

#include "minlen/error.hpp"
#include "minlen/quantum_spectrum.hpp"
#include "minlen/semiclassical.hpp"
#include "oracles.hpp"

using namespace minlen;

namespace {

const OscillatorQuantumParams kFlat{0.5, 1.0, 1.0, 0.0, 0.0};
const OscillatorQuantumParams kKempf{0.5, 1.0, 1.0, 0.01, 0.01};

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("undeformed spectrum is equally spaced") {
  for (int n = 0; n <= 40; ++n) {
    for (int l = n % 2; l <= n; l += 2) {
      CHECK(energy_nl(kFlat, n, l) == doctest::Approx(n + 1.5).epsilon(1e-15));
    }
  }
  const OscillatorQuantumParams scaled{2.0, 3.0, 0.5, 0.0, 0.0};
  CHECK(energy_nl(scaled, 4, 2) == doctest::Approx(1.5 * 5.5));
}

TEST_CASE("deformed ground state") {
  // sqrt(1.0001) * 3/2 + 0.015
  CHECK(energy_nl(kKempf, 0, 0) ==
        doctest::Approx(1.51507499813).epsilon(1e-11));
  CHECK(energy_nl(kKempf, 0, 0) > energy_nl(kFlat, 0, 0));
}

TEST_CASE("deformed spectrum grows quadratically") {
  const int n = 200000;
  // l = 0: only the (b + b') n^2 term survives.
  CHECK(energy_nl(kKempf, n, 0) / (double(n) * n) ==
        doctest::Approx(0.005).epsilon(1e-4));
  // l = n: the square root adds m w hbar b n^2 / 2.
  CHECK(energy_nl(kKempf, n, n) / (double(n) * n) ==
        doctest::Approx(0.01).epsilon(1e-4));
}

TEST_CASE("quantum number validation") {
  CHECK_THROWS_AS(energy_nl(kKempf, -1, 0), InvalidQuantumNumber);
  CHECK_THROWS_AS(energy_nl(kKempf, 2, 1), InvalidQuantumNumber);
  CHECK_THROWS_AS(energy_nl(kKempf, 2, 4), InvalidQuantumNumber);
  CHECK_THROWS_AS(energy_nl(kKempf, 3, -1), InvalidQuantumNumber);
  CHECK_NOTHROW(energy_nl(kKempf, 3, 1));
  CHECK_THROWS_AS(LevelIterator({0.0, 1.0, 1.0, 0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(LevelIterator({0.5, 1.0, 1.0, -0.01, 0.0}), InvalidArgument);
}

TEST_CASE("shells enumerate l = n, n - 2, ...") {
  LevelIterator it(kKempf);
  const auto s0 = it.next_shell();
  const auto s1 = it.next_shell();
  const auto s2 = it.next_shell();
  REQUIRE(s0.size() == 1);
  REQUIRE(s1.size() == 1);
  REQUIRE(s2.size() == 2);
  CHECK(s0[0].degeneracy == 1);
  CHECK(s1[0].degeneracy == 3);
  CHECK(s2[0].l == 2);
  CHECK(s2[0].degeneracy == 5);
  CHECK(s2[1].l == 0);
  CHECK(s2[1].degeneracy == 1);
  CHECK(it.next_n() == 3);
  // The two n = 2 states split under deformation.
  CHECK(s2[0].energy != s2[1].energy);
}

TEST_CASE("shell degeneracy is (n + 1)(n + 2) / 2") {
  LevelIterator it(kKempf);
  for (int n = 0; n <= 100; ++n) {
    int total = 0;
    for (const auto& level : it.next_shell()) {
      CHECK(level.n == n);
      CHECK(level.degeneracy == 2 * level.l + 1);
      total += level.degeneracy;
    }
    CHECK(total == (n + 1) * (n + 2) / 2);
  }
}

TEST_CASE("energies increase with l when beta >= beta'") {
  for (const auto& p : {kKempf, OscillatorQuantumParams{0.5, 1.0, 1.0, 0.03, 0.01},
                        OscillatorQuantumParams{1.0, 2.0, 1.0, 0.1, 0.0}}) {
    for (int n = 2; n <= 200; ++n) {
      for (int l = n % 2; l + 2 <= n; l += 2) {
        CHECK(energy_nl(p, n, l + 2) >= energy_nl(p, n, l));
      }
    }
  }
}

TEST_CASE("large beta' reverses the l ordering at high n") {
  const OscillatorQuantumParams p{0.5, 1.0, 1.0, 0.01, 0.05};
  bool reversed = false;
  for (int n = 2; n <= 200 && !reversed; ++n) {
    reversed = energy_nl(p, n, n) < energy_nl(p, n, n - 2);
  }
  CHECK(reversed);
}

TEST_CASE("undeformed quantum thermodynamics is the Einstein solid") {
  for (double t : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
    const ThermoPoint p = quantum_thermo(kFlat, t);
    CHECK(p.method == Method::quantum);
    CHECK(rel_dev(p.z1, oracle::oscillator_z(1.0, t)) <= 1e-10);
    CHECK(rel_dev(p.energy_per_particle, oracle::einstein_energy(1.0, t)) <=
          1e-10);
    CHECK(std::abs(p.heat_capacity_per_particle -
                   oracle::einstein_heat_capacity(1.0, t)) <= 1e-8);
  }
  CHECK(quantum_thermo(kFlat, 1.0).heat_capacity_per_particle ==
        doctest::Approx(2.7620).epsilon(1e-4));
}

TEST_CASE("deformed quantum heat capacity limits") {
  CHECK(quantum_thermo(kKempf, 0.02).heat_capacity_per_particle < 1e-15);
  const double hot = quantum_thermo(kKempf, 1000.0).heat_capacity_per_particle;
  CHECK(std::abs(hot - 1.5) / 1.5 <= 0.03);
}

TEST_CASE("quantum and classical deformed oscillators agree when hot") {
  for (double t : {5.0, 10.0, 20.0, 50.0}) {
    const double q = quantum_thermo(kKempf, t).heat_capacity_per_particle;
    const double c =
        classical_thermo(Oscillator{0.5, 1.0, 1.0}, {0.01, 0.01, 1.0}, t)
            .heat_capacity_per_particle;
    CHECK(std::abs(q - c) / c <= 0.05);
  }
  const double q5 = quantum_thermo(kKempf, 5.0).heat_capacity_per_particle;
  CHECK(q5 == doctest::Approx(2.5989).epsilon(1e-4));
  const double q50 = quantum_thermo(kKempf, 50.0).heat_capacity_per_particle;
  CHECK(q50 == doctest::Approx(1.91561).epsilon(1e-5));
}

TEST_CASE("quantum thermodynamics rejects bad temperatures") {
  CHECK_THROWS_AS(quantum_thermo(kKempf, 0.0), InvalidArgument);
  CHECK_THROWS_AS(quantum_thermo(kKempf, -1.0), InvalidArgument);
}

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

// Acceptance driver: one PASS/FAIL line per criterion, detail lines below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "minlen/asymptotics.hpp"
#include "minlen/deformation.hpp"
#include "minlen/numerics.hpp"
#include "minlen/quantum_spectrum.hpp"
#include "minlen/runner.hpp"
#include "minlen/semiclassical.hpp"
#include "oracles.hpp"

using namespace minlen;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void check(bool ok, const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    details_.push_back(std::string(ok ? "    ok   " : "    MISS ") + buf);
    passed_ = passed_ && ok;
  }
  void note(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    details_.push_back(std::string("    info ") + buf);
  }

  bool report(double seconds) const {
    std::printf("[%s] %d %s (%.1fs)\n", passed_ ? "PASS" : "FAIL", id_,
                title_.c_str(), seconds);
    for (const auto& d : details_) std::printf("%s\n", d.c_str());
    return passed_;
  }

 private:
  int id_;
  std::string title_;
  std::vector<std::string> details_;
  bool passed_ = true;
};

void jacobian_identity(Criterion& c) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const JacobianVerifyReport r = verify_jacobian(d, 100, 42);
    c.check(r.max_dev_bruteforce <= 1e-10,
            "D=%zu generic vs brute force: max rel dev %.3e <= 1e-10", d,
            r.max_dev_bruteforce);
    if (d == 3) {
      c.check(r.max_dev_closed_form <= 1e-12,
              "D=3 Kempf vs (1+bP^2)^2(1+(b+b')P^2): max rel dev %.3e <= 1e-12",
              r.max_dev_closed_form);
    }
  }
  const std::size_t counts[] = {pairing_table(1).entries.size(),
                                pairing_table(2).entries.size(),
                                pairing_table(3).entries.size()};
  c.check(counts[0] == 1 && counts[1] == 3 && counts[2] == 15,
          "pairing counts %zu/%zu/%zu == 1/3/15", counts[0], counts[1],
          counts[2]);
}

void undeformed_oracles(Criterion& c) {
  const DeformationParams flat{0.0, 0.0, 1.0};
  double worst_gas = 0.0;
  for (double v : {0.5, 1.0, 7.0}) {
    for (double m : {0.5, 1.0, 3.0}) {
      for (double t : {0.01, 1.0, 50.0, 1e4}) {
        const double z = classical_z1(IdealGas{v, 1.0, m}, flat, t);
        worst_gas = std::max(worst_gas,
                             rel_dev(z, v * std::pow(2 * kPi * m * t, 1.5)));
      }
    }
  }
  c.check(worst_gas <= 1e-8, "ideal gas Z1 vs V(2 pi m T)^1.5: %.3e <= 1e-8",
          worst_gas);

  const OscillatorQuantumParams q{0.5, 1.0, 1.0, 0.0, 0.0};
  double worst_z = 0.0;
  double worst_c = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = 0.2 * std::pow(250.0, i / 40.0);
    const ThermoPoint p = quantum_thermo(q, t);
    worst_z = std::max(worst_z, rel_dev(p.z1, oracle::oscillator_z(1.0, t)));
    worst_c = std::max(worst_c,
                       std::abs(p.heat_capacity_per_particle -
                                oracle::einstein_heat_capacity(1.0, t)));
  }
  c.check(worst_z <= 1e-10,
          "quantum Z vs (2 sinh(1/2T))^-3 on T in [0.2, 50]: %.3e <= 1e-10",
          worst_z);
  c.check(worst_c <= 1e-8, "quantum C vs Einstein: %.3e <= 1e-8", worst_c);
}

void low_t_corrections(Criterion& c) {
  const DeformationParams kempf{0.01, 0.01, 1.0};
  const DeformationParams flat{0.0, 0.0, 1.0};
  const double m = 0.5;
  for (double bmt : {0.001, 0.005}) {
    const double t = bmt / (kempf.beta * m);
    const double predicted = 6 * (3 * kempf.beta + kempf.beta_prime) * m * t;
    const double c_gas = classical_thermo(IdealGas{1.0, 1.0, m}, kempf, t)
                             .heat_capacity_per_particle;
    const double c_gas0 = classical_thermo(IdealGas{1.0, 1.0, m}, flat, t)
                              .heat_capacity_per_particle;
    const double r_gas = (c_gas0 - c_gas) / predicted;
    c.check(r_gas >= 0.9 && r_gas <= 1.1,
            "ideal gas  bmT=%.3f: deficit ratio %.4f in [0.9, 1.1]", bmt,
            r_gas);
    const double c_osc = classical_thermo(Oscillator{m, 1.0, 1.0}, kempf, t)
                             .heat_capacity_per_particle;
    const double c_osc0 = classical_thermo(Oscillator{m, 1.0, 1.0}, flat, t)
                              .heat_capacity_per_particle;
    const double r_osc = (c_osc0 - c_osc) / predicted;
    c.check(r_osc >= 0.9 && r_osc <= 1.1,
            "oscillator bmT=%.3f: deficit ratio %.4f in [0.9, 1.1]", bmt,
            r_osc);
  }
}

void high_t_ideal_gas_check(Criterion& c) {
  const DeformationParams kempf{0.01, 0.01, 1.0};
  const IdealGasHighT lim = high_t_ideal_gas(kempf, 0.5, 1.0);
  const ThermoPoint p = classical_thermo(IdealGas{1.0, 1.0, 0.5}, kempf, 1e6);
  const double dev = rel_dev(p.energy_per_particle, lim.energy_plateau);
  c.check(dev <= 1e-2, "E_per_N(1e6) = %.6f vs plateau %.6f: rel dev %.4f <= 0.01",
          p.energy_per_particle, lim.energy_plateau, dev);
  c.check(p.heat_capacity_per_particle <= 1e-2, "C_per_N(1e6) = %.3e <= 0.01",
          p.heat_capacity_per_particle);
  for (double t : {1e8, 1e10}) {
    const ThermoPoint q = classical_thermo(IdealGas{1.0, 1.0, 0.5}, kempf, t);
    c.note("E_per_N(%.0e) = %.6f, rel dev %.2e", t, q.energy_per_particle,
           rel_dev(q.energy_per_particle, lim.energy_plateau));
  }
}

void high_t_oscillator_check(Criterion& c) {
  const DeformationParams kempf{0.01, 0.01, 1.0};
  const double c_hot = classical_thermo(Oscillator{0.5, 1.0, 1.0}, kempf, 1e3)
                           .heat_capacity_per_particle;
  c.check(rel_dev(c_hot, 1.5) <= 2e-2,
          "classical C_per_N(1e3) = %.6f vs 1.5: rel dev %.4f <= 0.02", c_hot,
          rel_dev(c_hot, 1.5));

  const OscillatorQuantumParams q{0.5, 1.0, 1.0, 0.01, 0.01};
  double worst = 0.0;
  double worst_t = 0.0;
  for (int i = 0; i <= 45; ++i) {
    const double t = 5.0 + i;
    const double cq = quantum_thermo(q, t).heat_capacity_per_particle;
    const double cc = classical_thermo(Oscillator{0.5, 1.0, 1.0}, kempf, t)
                          .heat_capacity_per_particle;
    if (rel_dev(cq, cc) > worst) {
      worst = rel_dev(cq, cc);
      worst_t = t;
    }
  }
  c.check(worst <= 5e-2,
          "quantum vs classical C on T in [5, 50]: max rel dev %.4f (T=%g) <= 0.05",
          worst, worst_t);

  // Qualitative shape of the default sweep.
  SweepConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  // The classical curve isolates the deformation from quantum freeze-out.
  double crossing = -1.0;
  for (double t : sweep_temperatures(config)) {
    if (t > 2.5) break;
    const double cd =
        evaluate_point(config, t, Method::classical).heat_capacity_per_particle;
    if (cd < 2.9) {
      crossing = t;
      break;
    }
  }
  const double c_flat_hot =
      evaluate_point(config, config.t_max, Method::nondeformed)
          .heat_capacity_per_particle;
  const double t_knee = 2.5;
  c.note("C at T=%g: quantum deformed %.4f, nondeformed %.4f", t_knee,
         evaluate_point(config, t_knee, Method::quantum)
             .heat_capacity_per_particle,
         evaluate_point(config, t_knee, Method::nondeformed)
             .heat_capacity_per_particle);
  c.check(crossing > 0.0, "classical deformed C < 2.9 at some sweep T <= 2.5 (first at T=%g)",
          crossing);
  c.check(std::abs(c_flat_hot - 3.0) <= 1e-3,
          "nondeformed C(T=%g) = %.6f -> 3", config.t_max, c_flat_hot);
}

void equation_of_state(Criterion& c) {
  double worst_fd = 0.0;
  bool exact = true;
  for (const DeformationParams& params :
       {DeformationParams{0.0, 0.0, 1.0}, DeformationParams{0.01, 0.01, 1.0},
        DeformationParams{0.3, 0.05, 1.0}}) {
    for (const IdealGas& gas :
         {IdealGas{1.0, 1.0, 0.5}, IdealGas{3.5, 10.0, 2.0}}) {
      for (double t : {0.1, 1.0, 100.0, 1e6}) {
        const double nt_v = gas.particles * t / gas.volume;
        exact = exact && pressure(gas, params, t) == nt_v;
        worst_fd = std::max(worst_fd,
                            rel_dev(pressure_numeric(gas, params, t), nt_v));
      }
    }
  }
  c.check(exact, "%s", "analytic pV == NT");
  c.check(worst_fd <= 1e-10, "finite-difference pV vs NT: %.3e <= 1e-10",
          worst_fd);
}

void freezing(Criterion& c) {
  const DeformationParams params{0.01, 0.01, 1.0};
  for (double n : {2.0, 1.0}) {
    const PowerLaw law{1.0, n, 3, 0.0};
    const double cv = freezing_limit(law, params, 1e6);
    c.check(std::abs(cv - 3.0 / n) <= 1e-3,
            "s=0 D=3 n=%g: C(1e6) = %.8f vs %g", n, cv, 3.0 / n);
  }

  const PowerLaw marginal{1.0, 2.0, 3, 1.5};
  const double c_marginal = freezing_limit(marginal, params, 1e6);
  c.check(c_marginal <= 5e-2, "2s=D (s=1.5 n=2): C(1e6) = %.5f <= 0.05",
          c_marginal);
  const double gamma = std::pow(params.beta, marginal.growth);
  const double dz = power_law_radial_z(marginal, params, 1e7) -
                    power_law_radial_z(marginal, params, 1e6);
  const double target = std::numbers::ln10 / gamma;
  c.check(rel_dev(dz, target) <= 0.1,
          "2s=D (s=1.5 n=2): Z(1e7)-Z(1e6) = %.3f vs ln10/gamma = %.3f: rel dev %.4f <= 0.1",
          dz, target, rel_dev(dz, target));
  c.note("2s=D (s=1.5 n=2): ln10/(n gamma) = %.3f", target / marginal.exponent);
  const PowerLaw linear{1.0, 1.0, 3, 1.5};
  c.note("2s=D (s=1.5 n=1): C(1e6) = %.5f, Z(1e7)-Z(1e6) = %.3f",
         freezing_limit(linear, params, 1e6),
         power_law_radial_z(linear, params, 1e7) -
             power_law_radial_z(linear, params, 1e6));
  c.note("2s=D (s=1.5 n=2): C(1e12) = %.5f",
         freezing_limit(marginal, params, 1e12));

  const PowerLaw steep{1.0, 2.0, 3, 3.0};
  const double growth = power_law_radial_z(steep, params, 1e7) /
                            power_law_radial_z(steep, params, 1e6) -
                        1.0;
  c.check(growth <= 1e-3, "2s>D (s=3 n=2): Z(1e7)/Z(1e6) - 1 = %.3e <= 1e-3",
          growth);
}

void determinism(Criterion& c) {
  SweepConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::ostringstream first;
  std::ostringstream second;
  run_sweep(config, first);
  config.jobs = 1;
  run_sweep(config, second);
  c.check(first.str() == second.str() && !first.str().empty(),
          "default sweep: %zu bytes, byte-identical across runs",
          first.str().size());
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {1, "Jacobian identity", jacobian_identity},
      {2, "undeformed oracles", undeformed_oracles},
      {3, "low-temperature corrections", low_t_corrections},
      {4, "high-temperature ideal gas", high_t_ideal_gas_check},
      {5, "high-temperature oscillator", high_t_oscillator_check},
      {6, "equation of state", equation_of_state},
      {7, "freezing of degrees of freedom", freezing},
      {8, "sweep determinism", determinism},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Criterion c(e.id, e.title);
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, "exception: %s", ex.what());
    }
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    if (!c.report(took.count())) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(entries));
  return failed == 0 ? 0 : 1;
}

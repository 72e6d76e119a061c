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

#ifndef MINLEN_RUNNER_HPP
#define MINLEN_RUNNER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minlen/error.hpp"
#include "minlen/numerics.hpp"
#include "minlen/thermo_point.hpp"

namespace minlen {

enum class SweepSystem { oscillator, ideal_gas };
enum class SweepScale { linear, log };

// Defaults: oscillators with
// beta = beta' = 0.01, hbar = omega = 2m = 1, T in [0.1, 20].
struct SweepConfig {
  SweepSystem system = SweepSystem::oscillator;
  double beta = 0.01;
  double beta_prime = 0.01;
  double mass = 0.5;
  double omega = 1.0;
  double hbar = 1.0;
  double volume = 1.0;
  double t_min = 0.1;
  double t_max = 20.0;
  int points = 60;
  SweepScale scale = SweepScale::linear;
  std::vector<Method> methods = {Method::classical, Method::quantum,
                                 Method::nondeformed};
  unsigned jobs = 1;

  // Throws InvalidArgument for inconsistent settings, including the quantum
  // method on the ideal gas (no spectrum available).
  void validate() const;
};

// Numeric failure of one sweep point.
class SweepFailure : public Error {
 public:
  SweepFailure(double temperature, Method method, const std::string& cause);
  double temperature() const { return temperature_; }
  Method method() const { return method_; }

 private:
  double temperature_;
  Method method_;
};

std::vector<double> sweep_temperatures(const SweepConfig& config);

ThermoPoint evaluate_point(const SweepConfig& config, double temperature,
                           Method method);

// Formats one value with 12 significant digits.
std::string format_number(double value);

// Writes the CSV (header `T,Z1,E_per_N,C_per_N,method`, LF endings) in
// ascending T, then in the configured method order. Points are computed on
// up to config.jobs threads; output does not depend on the thread count.
// Throws SweepFailure for the first failing point in output order.
void run_sweep(const SweepConfig& config, std::ostream& out);

struct JacobianVerifyReport {
  std::size_t dimension = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_dev_bruteforce = 0.0;
  double max_dev_closed_form = 0.0;
  double tolerance = 1e-10;
  bool passed() const;
};

// Compares the reduced pairing sum against the full permutation sum and
// the closed Kempf form at random phase points and random beta, beta'.
// Throws DimensionTooLarge for D > 3 and InvalidArgument for D = 0.
JacobianVerifyReport verify_jacobian(std::size_t dimension, int trials,
                                     std::uint64_t seed);
void print_report(const JacobianVerifyReport& report, std::ostream& out);

enum class LimitsSystem { ideal_gas, oscillator, power_law };

struct LimitsConfig {
  LimitsSystem system = LimitsSystem::ideal_gas;
  double beta = 0.01;
  double beta_prime = 0.01;
  double mass = 0.5;
  double omega = 1.0;
  double volume = 1.0;
};

struct LimitRow {
  std::string quantity;
  double temperature = 0.0;
  double numeric = 0.0;
  double asymptotic = 0.0;
  // Relative tolerance, or an absolute one when absolute is set. Rows
  // without a tolerance are informational.
  std::optional<double> tolerance;
  bool absolute = false;

  double deviation() const;
  bool passed() const;
};

struct LimitsReport {
  std::vector<LimitRow> rows;
  bool passed() const;
};

// Numeric thermodynamics beside the closed-form low-T and high-T
// expansions of the chosen system, followed by the large-T freezing table
// of the power-law model. Requires beta > 0.
LimitsReport run_limits(const LimitsConfig& config,
                        const QuadratureSettings& settings = {});
void print_report(const LimitsReport& report, std::ostream& out);

}  // namespace minlen

#endif  // MINLEN_RUNNER_HPP

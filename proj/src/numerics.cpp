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

#include "minlen/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "minlen/error.hpp"

namespace minlen {

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0)) throw InvalidArgument("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw InvalidArgument("abs_tol must be nonnegative");
  if (max_subdivisions < 10) {
    throw InvalidArgument("max_subdivisions must be at least 10");
  }
}

void SeriesSettings::validate() const {
  if (!(tail_rel_tol > 0.0)) {
    throw InvalidArgument("tail_rel_tol must be positive");
  }
  if (max_terms == 0) throw InvalidArgument("max_terms must be positive");
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <typename F>
Panel kronrod_panel(const F& g, double lo, double hi) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_centre = g(centre);
  double kronrod = f_centre * kKronrodWeights[7];
  double gauss = f_centre * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (std::size_t k = 0; k < 7; ++k) {
    const double dx = half * kKronrodNodes[k];
    f_left[k] = g(centre - dx);
    f_right[k] = g(centre + dx);
    const double pair = f_left[k] + f_right[k];
    kronrod += kKronrodWeights[k] * pair;
    abs_sum += kKronrodWeights[k] * (std::abs(f_left[k]) + std::abs(f_right[k]));
    if (k % 2 == 1) gauss += kGaussWeights[k / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_centre - mean);
  for (std::size_t k = 0; k < 7; ++k) {
    asc += kKronrodWeights[k] *
           (std::abs(f_left[k] - mean) + std::abs(f_right[k] - mean));
  }
  const double value = kronrod * half;
  asc *= half;
  abs_sum *= half;
  double error = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && error != 0.0) {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * abs_sum, error);
  }
  return {lo, hi, value, error};
}

}  // namespace

QuadratureResult radial_integral(const RadialFn& f,
                                 const QuadratureSettings& settings,
                                 double scale) {
  settings.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("radial_integral scale must be positive and finite");
  }
  auto mapped = [&f, scale](double u) {
    const double w = 1.0 - u;
    const double p = scale * u / w;
    const double value = f(p) * scale / (w * w);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "non-finite integrand at P=" << p;
      throw Error(msg.str());
    }
    return value;
  };

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(settings.max_subdivisions) + 1);
  panels.push_back(kronrod_panel(mapped, 0.0, 1.0));
  int subdivisions = 0;
  for (;;) {
    CompensatedSum total;
    CompensatedSum total_error;
    for (const Panel& p : panels) {
      total.add(p.value);
      total_error.add(p.error);
    }
    const double value = total.value();
    const double error = total_error.value();
    const double target = std::max(settings.abs_tol,
                                   settings.rel_tol * std::abs(value));
    if (error <= target) return {value, error, subdivisions};

    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& a, const Panel& b) { return a.error < b.error; });
    const double mid = 0.5 * (worst->lo + worst->hi);
    if (subdivisions >= settings.max_subdivisions || mid <= worst->lo ||
        mid >= worst->hi) {
      std::ostringstream msg;
      msg << "radial_integral did not converge after " << subdivisions
          << " subdivisions (estimate " << value << ", residual " << error
          << ", target " << target << ")";
      throw NonConvergence(msg.str(), error);
    }
    const Panel left = kronrod_panel(mapped, worst->lo, mid);
    const Panel right = kronrod_panel(mapped, mid, worst->hi);
    *worst = left;
    panels.push_back(right);
    ++subdivisions;
  }
}

double unit_sphere_area(int dimension) {
  if (dimension < 1) throw InvalidArgument("dimension must be positive");
  const double half = 0.5 * dimension;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

namespace {

double thermal_momentum(const RadialFn& hamiltonian, double temperature) {
  double p = 1.0;
  if (hamiltonian(p) < temperature) {
    for (int k = 0; k < 1000 && hamiltonian(p) < temperature; ++k) p *= 2.0;
  } else {
    for (int k = 0; k < 1000 && hamiltonian(p) > temperature; ++k) p *= 0.5;
  }
  return p;
}

}  // namespace

Moments boltzmann_moments(const RadialFn& hamiltonian, const RadialFn& jacobian,
                          int dimension, double temperature,
                          const QuadratureSettings& settings,
                          std::optional<double> momentum_scale) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  const double area = unit_sphere_area(dimension);
  const double scale =
      momentum_scale.value_or(thermal_momentum(hamiltonian, temperature));
  const double radial_power = dimension - 1;

  auto weight = [&](double p) {
    const double h = hamiltonian(p);
    const double boltzmann = std::exp(-h / temperature);
    if (boltzmann == 0.0) return 0.0;
    return std::pow(p, radial_power) * boltzmann / jacobian(p);
  };

  const double z =
      radial_integral(weight, settings, scale).value;
  if (!(z > 0.0)) throw Error("momentum partition function is not positive");
  const double m1 =
      radial_integral([&](double p) { return weight(p) * hamiltonian(p); },
                      settings, scale)
          .value;
  const double mean = m1 / z;
  const double m2 = radial_integral(
                        [&](double p) {
                          const double d = hamiltonian(p) - mean;
                          return weight(p) * d * d;
                        },
                        settings, scale)
                        .value;
  return {area * z, mean, m2 / z};
}

SeriesResult sum_levels(const ShellSource& shells, double temperature,
                        const SeriesSettings& settings) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  settings.validate();

  // Weights are taken relative to the first level so that Z does not
  // underflow at low temperature; the shift is restored at the end.
  std::optional<double> reference;
  CompensatedSum weight_sum;
  double mean = 0.0;  // of E - reference
  double spread = 0.0;  // sum of w (E - mean)^2
  std::size_t terms = 0;
  std::size_t shell_index = 0;
  double previous_min = 0.0;
  double previous_bound = 0.0;
  double previous_ratio = std::numeric_limits<double>::infinity();
  double tail = 0.0;

  while (auto shell = shells()) {
    if (shell->empty()) continue;
    if (!reference) reference = shell->front().energy;
    double shell_min = std::numeric_limits<double>::infinity();
    double shell_degeneracy = 0.0;
    for (const Level& level : *shell) {
      if (++terms > settings.max_terms) {
        throw MaxTermsExceeded("level sum exceeded " +
                               std::to_string(settings.max_terms) + " terms");
      }
      const double x = level.energy - *reference;
      const double w = level.degeneracy * std::exp(-x / temperature);
      shell_min = std::min(shell_min, level.energy);
      shell_degeneracy += level.degeneracy;
      if (w == 0.0) continue;
      weight_sum.add(w);
      const double after = weight_sum.value();
      const double delta = x - mean;
      mean += (w / after) * delta;
      spread += w * delta * (x - mean);
    }

    if (shell_index >= settings.monotone_prefix && shell_min < previous_min) {
      std::ostringstream msg;
      msg << "shell " << shell_index << " minimum energy " << shell_min
          << " is below the previous shell minimum " << previous_min;
      throw NonMonotoneTail(msg.str());
    }
    const double bound =
        shell_degeneracy * std::exp(-(shell_min - *reference) / temperature);
    const double total = weight_sum.value();
    if (shell_index > 0) {
      if (bound == 0.0 && total > 0.0) {
        tail = 0.0;
        break;
      }
      const double ratio = bound / previous_bound;
      const double worst = std::max(ratio, previous_ratio);
      if (worst < 1.0) {
        tail = bound * worst / (1.0 - worst);
        if (tail <= settings.tail_rel_tol * total) break;
      }
      previous_ratio = ratio;
    }
    previous_min = shell_min;
    previous_bound = bound;
    ++shell_index;
  }

  const double total = weight_sum.value();
  if (!reference || !(total > 0.0)) {
    throw Error("level sum has no positive weight");
  }
  const double shift = reference.value_or(0.0);
  SeriesResult result;
  result.moments.weight = total * std::exp(-shift / temperature);
  result.moments.mean = mean + shift;
  result.moments.variance = spread / total;
  result.terms = terms;
  result.tail_bound = tail / total;
  return result;
}

SeriesResult sum_levels(std::span<const Level> levels, double temperature,
                        const SeriesSettings& settings) {
  std::size_t next = 0;
  ShellSource source = [&]() -> std::optional<LevelShell> {
    if (next == levels.size()) return std::nullopt;
    return LevelShell{levels[next++]};
  };
  return sum_levels(source, temperature, settings);
}

double heat_capacity_from_moments(double mean_energy, double mean_energy_sq,
                                  double temperature, double tolerance) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  const double variance = mean_energy_sq - mean_energy * mean_energy;
  if (variance < 0.0) {
    if (variance < -tolerance * std::abs(mean_energy_sq)) {
      std::ostringstream msg;
      msg << "negative energy variance " << variance;
      throw NegativeVariance(msg.str());
    }
    return 0.0;
  }
  return variance / (temperature * temperature);
}

}  // namespace minlen

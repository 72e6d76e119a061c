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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "minlen/asymptotics.hpp"
#include "minlen/deformation.hpp"
#include "minlen/error.hpp"
#include "minlen/quantum_spectrum.hpp"
#include "minlen/runner.hpp"
#include "minlen/semiclassical.hpp"

namespace py = pybind11;

namespace {

minlen::DeformationParams make_params(double beta, double beta_prime,
                                      double hbar) {
  minlen::DeformationParams params{beta, beta_prime, hbar};
  params.validate();
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermodynamics of systems with a minimal length (Kempf algebra).";

  auto error = py::register_exception<minlen::Error>(m, "MinlenError");
  py::register_exception<minlen::InvalidArgument>(m, "InvalidArgument", error);
  py::register_exception<minlen::NonConvergence>(m, "NonConvergence", error);

  py::enum_<minlen::Method>(m, "Method")
      .value("classical", minlen::Method::classical)
      .value("quantum", minlen::Method::quantum)
      .value("nondeformed", minlen::Method::nondeformed);

  py::class_<minlen::ThermoPoint>(m, "ThermoPoint")
      .def_readonly("T", &minlen::ThermoPoint::temperature)
      .def_readonly("Z1", &minlen::ThermoPoint::z1)
      .def_readonly("E_per_N", &minlen::ThermoPoint::energy_per_particle)
      .def_readonly("C_per_N", &minlen::ThermoPoint::heat_capacity_per_particle)
      .def_readonly("method", &minlen::ThermoPoint::method)
      .def("__repr__", [](const minlen::ThermoPoint& p) {
        std::ostringstream s;
        s << "ThermoPoint(T=" << p.temperature << ", Z1=" << p.z1
          << ", E_per_N=" << p.energy_per_particle
          << ", C_per_N=" << p.heat_capacity_per_particle << ", method="
          << minlen::to_string(p.method) << ")";
        return s.str();
      });

  m.def("pairing_count",
        [](std::size_t d) { return minlen::pairing_table(d).entries.size(); },
        py::arg("dimension"));

  m.def(
      "kempf_jacobian",
      [](double beta, double beta_prime, double p_squared, std::size_t d) {
        return minlen::kempf_jacobian(make_params(beta, beta_prime, 1.0),
                                      p_squared, d);
      },
      py::arg("beta"), py::arg("beta_prime"), py::arg("p_squared"),
      py::arg("dimension") = 3);

  m.def(
      "jacobian_generic",
      [](double beta, double beta_prime, std::vector<double> x,
         std::vector<double> p) {
        if (x.size() != p.size()) {
          throw minlen::InvalidArgument("X and P must have the same length");
        }
        const auto brackets = minlen::kempf_brackets(
            make_params(beta, beta_prime, 1.0), x.size());
        return minlen::jacobian_generic(brackets, x, p);
      },
      py::arg("beta"), py::arg("beta_prime"), py::arg("x"), py::arg("p"),
      "Kempf Jacobian at (X, P) from the bracket pairing sum.");

  m.def(
      "ideal_gas_thermo",
      [](double t, double beta, double beta_prime, double mass, double volume) {
        return minlen::classical_thermo(minlen::IdealGas{volume, 1.0, mass},
                                        make_params(beta, beta_prime, 1.0), t);
      },
      py::arg("T"), py::arg("beta") = 0.0, py::arg("beta_prime") = 0.0,
      py::arg("mass") = 0.5, py::arg("volume") = 1.0);

  m.def(
      "oscillator_thermo",
      [](double t, double beta, double beta_prime, double mass, double omega) {
        return minlen::classical_thermo(minlen::Oscillator{mass, omega, 1.0},
                                        make_params(beta, beta_prime, 1.0), t);
      },
      py::arg("T"), py::arg("beta") = 0.0, py::arg("beta_prime") = 0.0,
      py::arg("mass") = 0.5, py::arg("omega") = 1.0);

  m.def(
      "power_law_thermo",
      [](double t, double alpha, double exponent, int dimension, double growth,
         double beta) {
        return minlen::classical_thermo(
            minlen::PowerLaw{alpha, exponent, dimension, growth},
            make_params(beta, 0.0, 1.0), t);
      },
      py::arg("T"), py::arg("alpha") = 1.0, py::arg("exponent") = 2.0,
      py::arg("dimension") = 3, py::arg("growth") = 0.0, py::arg("beta") = 0.0);

  m.def(
      "quantum_oscillator_thermo",
      [](double t, double beta, double beta_prime, double mass, double omega,
         double hbar) {
        return minlen::quantum_thermo(
            minlen::OscillatorQuantumParams{mass, omega, hbar, beta,
                                            beta_prime},
            t);
      },
      py::arg("T"), py::arg("beta") = 0.0, py::arg("beta_prime") = 0.0,
      py::arg("mass") = 0.5, py::arg("omega") = 1.0, py::arg("hbar") = 1.0);

  m.def(
      "energy_nl",
      [](int n, int l, double beta, double beta_prime, double mass,
         double omega, double hbar) {
        return minlen::energy_nl(
            minlen::OscillatorQuantumParams{mass, omega, hbar, beta,
                                            beta_prime},
            n, l);
      },
      py::arg("n"), py::arg("l"), py::arg("beta") = 0.0,
      py::arg("beta_prime") = 0.0, py::arg("mass") = 0.5,
      py::arg("omega") = 1.0, py::arg("hbar") = 1.0);

  m.def(
      "ideal_gas_pressure",
      [](double t, double beta, double beta_prime, double volume,
         double particles, bool numeric) {
        const minlen::IdealGas gas{volume, particles, 0.5};
        const auto params = make_params(beta, beta_prime, 1.0);
        return numeric ? minlen::pressure_numeric(gas, params, t)
                       : minlen::pressure(gas, params, t);
      },
      py::arg("T"), py::arg("beta") = 0.0, py::arg("beta_prime") = 0.0,
      py::arg("volume") = 1.0, py::arg("particles") = 1.0,
      py::arg("numeric") = false);

  m.def(
      "high_t_ideal_gas",
      [](double beta, double beta_prime, double mass, double volume) {
        const auto lim = minlen::high_t_ideal_gas(
            make_params(beta, beta_prime, 1.0), mass, volume);
        return py::make_tuple(lim.z_limit, lim.energy_plateau);
      },
      py::arg("beta"), py::arg("beta_prime"), py::arg("mass") = 0.5,
      py::arg("volume") = 1.0, "Returns (Z_limit, E_plateau).");

  m.def(
      "sweep_csv",
      [](double beta, double beta_prime, double t_min, double t_max,
         int points, std::vector<std::string> methods, bool ideal_gas) {
        minlen::SweepConfig config;
        config.beta = beta;
        config.beta_prime = beta_prime;
        config.t_min = t_min;
        config.t_max = t_max;
        config.points = points;
        config.system = ideal_gas ? minlen::SweepSystem::ideal_gas
                                  : minlen::SweepSystem::oscillator;
        config.methods.clear();
        for (const auto& name : methods) {
          const auto method = minlen::parse_method(name);
          if (!method) throw minlen::InvalidArgument("unknown method " + name);
          config.methods.push_back(*method);
        }
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          minlen::run_sweep(config, out);
        }
        return out.str();
      },
      py::arg("beta") = 0.01, py::arg("beta_prime") = 0.01,
      py::arg("t_min") = 0.1, py::arg("t_max") = 20.0, py::arg("points") = 60,
      py::arg("methods") =
          std::vector<std::string>{"classical", "quantum", "nondeformed"},
      py::arg("ideal_gas") = false);
}

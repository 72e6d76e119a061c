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

#ifndef MINLEN_THERMO_POINT_HPP
#define MINLEN_THERMO_POINT_HPP

#include <optional>
#include <string_view>

namespace minlen {

enum class Method { classical, quantum, nondeformed };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

// Thermodynamics of one particle at temperature T. E and C are per particle,
// C in units of k_B.
struct ThermoPoint {
  double temperature = 0.0;
  double z1 = 0.0;
  double energy_per_particle = 0.0;
  double heat_capacity_per_particle = 0.0;
  Method method = Method::classical;
};

}  // namespace minlen

#endif  // MINLEN_THERMO_POINT_HPP

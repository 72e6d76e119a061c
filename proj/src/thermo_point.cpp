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

#include "minlen/thermo_point.hpp"

namespace minlen {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::classical:
      return "classical";
    case Method::quantum:
      return "quantum";
    case Method::nondeformed:
      return "nondeformed";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "classical") return Method::classical;
  if (name == "quantum") return Method::quantum;
  if (name == "nondeformed") return Method::nondeformed;
  return std::nullopt;
}

}  // namespace minlen

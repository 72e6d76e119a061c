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

#ifndef MINLEN_ERROR_HPP
#define MINLEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minlen {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidQuantumNumber : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature ran out of subdivisions; residual() is the final
// global error estimate.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class MaxTermsExceeded : public Error {
 public:
  using Error::Error;
};

class NonMonotoneTail : public Error {
 public:
  using Error::Error;
};

class NegativeVariance : public Error {
 public:
  using Error::Error;
};

// High-temperature limits that only exist for beta > 0.
class ZeroDeformation : public Error {
 public:
  using Error::Error;
};

}  // namespace minlen

#endif  // MINLEN_ERROR_HPP

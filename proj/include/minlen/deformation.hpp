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

#ifndef MINLEN_DEFORMATION_HPP
#define MINLEN_DEFORMATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace minlen {

// Parameters of the two-parameter Kempf algebra
//   {X_i, P_j} = (1 + beta P^2) delta_ij + beta' P_i P_j.
struct DeformationParams {
  double beta = 0.0;
  double beta_prime = 0.0;
  double hbar = 1.0;

  // Throws InvalidArgument unless beta, beta' >= 0 and hbar > 0.
  void validate() const;

  // Smallest attainable position uncertainty, hbar * sqrt(beta).
  double min_length() const;
};

using PhaseVector = std::span<const double>;

// Bracket component as a function of (i, j, X, P) with zero-based i, j.
using BracketFn =
    std::function<double(std::size_t, std::size_t, PhaseVector, PhaseVector)>;

// Antisymmetric 2D x 2D matrix of phase-space brackets {A_a, A_b} evaluated
// at one point, with A_{2i} = X_i and A_{2i+1} = P_i (zero-based).
class BracketMatrix {
 public:
  explicit BracketMatrix(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t order() const { return 2 * dimension_; }

  double operator()(std::size_t a, std::size_t b) const {
    return values_[a * order() + b];
  }
  // Sets {A_a, A_b} = v and {A_b, A_a} = -v.
  void set(std::size_t a, std::size_t b, double v);

 private:
  std::size_t dimension_;
  std::vector<double> values_;
};

// Deformed Poisson brackets of a D-dimensional system. Only the upper
// triangles (i < j) of the xx and pp tables are ever queried; the lower
// triangle is served by negation and the diagonal is zero, so antisymmetry
// holds by construction.
class BracketSet {
 public:
  BracketSet(std::size_t dimension, BracketFn xp, BracketFn xx, BracketFn pp);

  // {X_i, P_j} = delta_ij, all other brackets zero.
  static BracketSet canonical(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }

  double xp(std::size_t i, std::size_t j, PhaseVector x, PhaseVector p) const;
  double xx(std::size_t i, std::size_t j, PhaseVector x, PhaseVector p) const;
  double pp(std::size_t i, std::size_t j, PhaseVector x, PhaseVector p) const;

  // {A_a, A_b} in interleaved numbering.
  double phase(std::size_t a, std::size_t b, PhaseVector x,
               PhaseVector p) const;

  BracketMatrix evaluate(PhaseVector x, PhaseVector p) const;

 private:
  void check_point(PhaseVector x, PhaseVector p) const;

  std::size_t dimension_;
  BracketFn xp_;
  BracketFn xx_;
  BracketFn pp_;
};

// Classical limit of the Kempf commutators in D dimensions.
BracketSet kempf_brackets(const DeformationParams& params,
                          std::size_t dimension);

// One perfect matching of {0, ..., 2D-1}. Each pair is ascending and pairs
// are ordered by their first element; sign is the parity of the permutation
// taking (0, 1, ..., 2D-1) to the concatenated pairs.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  int sign = 1;
};

struct PairingTable {
  std::size_t dimension = 0;
  std::vector<Pairing> entries;
};

inline constexpr std::size_t kMaxPairingDimension = 6;

// All (2D-1)!! perfect matchings, identity pairing first.
// Throws DimensionTooLarge for D > 6 and InvalidArgument for D = 0.
PairingTable pairing_table(std::size_t dimension);

enum class Coordinate { X, P };

struct Variable {
  Coordinate kind;
  std::size_t index;  // zero-based
  bool operator==(const Variable&) const = default;
};

// One bracket written with X before P and lower index first.
struct Bracket {
  Variable left;
  Variable right;
  bool operator==(const Bracket&) const = default;
};

struct BracketTerm {
  std::vector<Bracket> factors;
  int sign = 1;
};

// The pairing table rewritten as products of brackets in X-before-P order;
// a pair (P_i, X_j) becomes -{X_j, P_i}.
std::vector<BracketTerm> canonical_terms(std::size_t dimension);

// Signed sum over the pairing table of products of bracket values, i.e. the
// Pfaffian of the bracket matrix.
double jacobian_from_matrix(const BracketMatrix& brackets,
                            const PairingTable& table);

// Jacobian d(X,P)/d(x,p) of the map from canonical variables, expressed
// through the brackets alone.
double jacobian_generic(const BracketSet& brackets, PhaseVector x,
                        PhaseVector p);

// Unreduced Levi-Civita sum over all (2D)! index permutations divided by
// 2^D D!. Only for D <= 3.
double jacobian_bruteforce(const BracketSet& brackets, PhaseVector x,
                           PhaseVector p);

// Closed form of the Kempf Jacobian, (1 + beta P^2)^(D-1) (1 + (beta +
// beta') P^2); D = 3 gives (1 + beta P^2)^2 (1 + (beta + beta') P^2).
double kempf_jacobian(const DeformationParams& params, double p_squared,
                      std::size_t dimension = 3);

// First-order Jacobian, 1 + sum_i (f_ii - 1).
double linearized_jacobian(const BracketSet& brackets, PhaseVector x,
                           PhaseVector p);

}  // namespace minlen

#endif  // MINLEN_DEFORMATION_HPP

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

#include "minlen/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "minlen/error.hpp"

namespace minlen {

void DeformationParams::validate() const {
  if (!(beta >= 0.0) || !(beta_prime >= 0.0)) {
    throw InvalidArgument("deformation parameters must be nonnegative");
  }
  if (!(hbar > 0.0)) {
    throw InvalidArgument("hbar must be positive");
  }
}

double DeformationParams::min_length() const { return hbar * std::sqrt(beta); }

BracketMatrix::BracketMatrix(std::size_t dimension)
    : dimension_(dimension), values_(4 * dimension * dimension, 0.0) {}

void BracketMatrix::set(std::size_t a, std::size_t b, double v) {
  values_[a * order() + b] = v;
  values_[b * order() + a] = -v;
}

BracketSet::BracketSet(std::size_t dimension, BracketFn xp, BracketFn xx,
                       BracketFn pp)
    : dimension_(dimension),
      xp_(std::move(xp)),
      xx_(std::move(xx)),
      pp_(std::move(pp)) {
  if (dimension_ == 0) {
    throw InvalidArgument("bracket set dimension must be positive");
  }
  if (!xp_ || !xx_ || !pp_) {
    throw InvalidArgument("bracket set requires all three bracket tables");
  }
}

BracketSet BracketSet::canonical(std::size_t dimension) {
  auto zero = [](std::size_t, std::size_t, PhaseVector, PhaseVector) {
    return 0.0;
  };
  return BracketSet(
      dimension,
      [](std::size_t i, std::size_t j, PhaseVector, PhaseVector) {
        return i == j ? 1.0 : 0.0;
      },
      zero, zero);
}

void BracketSet::check_point(PhaseVector x, PhaseVector p) const {
  if (x.size() != dimension_ || p.size() != dimension_) {
    throw InvalidArgument("phase point has wrong dimension");
  }
}

double BracketSet::xp(std::size_t i, std::size_t j, PhaseVector x,
                      PhaseVector p) const {
  return xp_(i, j, x, p);
}

double BracketSet::xx(std::size_t i, std::size_t j, PhaseVector x,
                      PhaseVector p) const {
  if (i == j) return 0.0;
  return i < j ? xx_(i, j, x, p) : -xx_(j, i, x, p);
}

double BracketSet::pp(std::size_t i, std::size_t j, PhaseVector x,
                      PhaseVector p) const {
  if (i == j) return 0.0;
  return i < j ? pp_(i, j, x, p) : -pp_(j, i, x, p);
}

double BracketSet::phase(std::size_t a, std::size_t b, PhaseVector x,
                         PhaseVector p) const {
  const std::size_t i = a / 2;
  const std::size_t j = b / 2;
  const bool a_is_x = a % 2 == 0;
  const bool b_is_x = b % 2 == 0;
  if (a_is_x && b_is_x) return xx(i, j, x, p);
  if (!a_is_x && !b_is_x) return pp(i, j, x, p);
  if (a_is_x) return xp(i, j, x, p);
  return -xp(j, i, x, p);
}

BracketMatrix BracketSet::evaluate(PhaseVector x, PhaseVector p) const {
  check_point(x, p);
  BracketMatrix m(dimension_);
  for (std::size_t a = 0; a < m.order(); ++a) {
    for (std::size_t b = a + 1; b < m.order(); ++b) {
      m.set(a, b, phase(a, b, x, p));
    }
  }
  return m;
}

namespace {

double squared_norm(PhaseVector v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

// Parity of a permutation of 0..n-1 by counting transpositions while
// sorting it in place.
int permutation_sign(std::vector<std::size_t> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  return sign;
}

void enumerate_pairings(std::vector<std::pair<std::size_t, std::size_t>>& acc,
                        std::vector<bool>& used, std::vector<Pairing>& out) {
  const auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    std::vector<std::size_t> flat;
    flat.reserve(used.size());
    for (const auto& [a, b] : acc) {
      flat.push_back(a);
      flat.push_back(b);
    }
    out.push_back({acc, permutation_sign(std::move(flat))});
    return;
  }
  const auto a = static_cast<std::size_t>(first - used.begin());
  used[a] = true;
  for (std::size_t b = a + 1; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    acc.emplace_back(a, b);
    enumerate_pairings(acc, used, out);
    acc.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

Variable variable_of(std::size_t a) {
  return {a % 2 == 0 ? Coordinate::X : Coordinate::P, a / 2};
}

}  // namespace

BracketSet kempf_brackets(const DeformationParams& params,
                          std::size_t dimension) {
  params.validate();
  const double beta = params.beta;
  const double beta_prime = params.beta_prime;
  auto xp = [beta, beta_prime](std::size_t i, std::size_t j, PhaseVector,
                               PhaseVector p) {
    const double diag = i == j ? 1.0 + beta * squared_norm(p) : 0.0;
    return diag + beta_prime * p[i] * p[j];
  };
  auto xx = [beta, beta_prime](std::size_t i, std::size_t j, PhaseVector x,
                               PhaseVector p) {
    const double p2 = squared_norm(p);
    const double factor =
        (2.0 * beta - beta_prime + (2.0 * beta + beta_prime) * beta * p2) /
        (1.0 + beta * p2);
    return factor * (p[i] * x[j] - p[j] * x[i]);
  };
  auto pp = [](std::size_t, std::size_t, PhaseVector, PhaseVector) {
    return 0.0;
  };
  return BracketSet(dimension, xp, xx, pp);
}

PairingTable pairing_table(std::size_t dimension) {
  if (dimension == 0) {
    throw InvalidArgument("pairing table dimension must be positive");
  }
  if (dimension > kMaxPairingDimension) {
    throw DimensionTooLarge("pairing table supports D <= " +
                            std::to_string(kMaxPairingDimension) + ", got " +
                            std::to_string(dimension));
  }
  PairingTable table{dimension, {}};
  std::vector<std::pair<std::size_t, std::size_t>> acc;
  std::vector<bool> used(2 * dimension, false);
  enumerate_pairings(acc, used, table.entries);
  return table;
}

std::vector<BracketTerm> canonical_terms(std::size_t dimension) {
  const PairingTable table = pairing_table(dimension);
  std::vector<BracketTerm> terms;
  terms.reserve(table.entries.size());
  for (const Pairing& pairing : table.entries) {
    BracketTerm term{{}, pairing.sign};
    for (const auto& [a, b] : pairing.pairs) {
      Variable left = variable_of(a);
      Variable right = variable_of(b);
      if (left.kind == Coordinate::P && right.kind == Coordinate::X) {
        std::swap(left, right);
        term.sign = -term.sign;
      }
      term.factors.push_back({left, right});
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

double jacobian_from_matrix(const BracketMatrix& brackets,
                            const PairingTable& table) {
  if (brackets.dimension() != table.dimension) {
    throw InvalidArgument("pairing table does not match bracket dimension");
  }
  double sum = 0.0;
  for (const Pairing& pairing : table.entries) {
    double product = pairing.sign;
    for (const auto& [a, b] : pairing.pairs) product *= brackets(a, b);
    sum += product;
  }
  return sum;
}

double jacobian_generic(const BracketSet& brackets, PhaseVector x,
                        PhaseVector p) {
  return jacobian_from_matrix(brackets.evaluate(x, p),
                              pairing_table(brackets.dimension()));
}

double jacobian_bruteforce(const BracketSet& brackets, PhaseVector x,
                           PhaseVector p) {
  const std::size_t dim = brackets.dimension();
  if (dim > 3) {
    throw DimensionTooLarge("brute-force Jacobian supports D <= 3, got " +
                            std::to_string(dim));
  }
  const BracketMatrix m = brackets.evaluate(x, p);
  std::vector<std::size_t> perm(2 * dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double sum = 0.0;
  do {
    double product = permutation_sign(perm);
    for (std::size_t k = 0; k < dim; ++k) {
      product *= m(perm[2 * k], perm[2 * k + 1]);
    }
    sum += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  double norm = 1.0;
  for (std::size_t k = 1; k <= dim; ++k) norm *= 2.0 * static_cast<double>(k);
  return sum / norm;
}

double kempf_jacobian(const DeformationParams& params, double p_squared,
                      std::size_t dimension) {
  if (!(p_squared >= 0.0)) {
    throw InvalidArgument("P^2 must be nonnegative");
  }
  if (dimension == 0) {
    throw InvalidArgument("dimension must be positive");
  }
  const double transverse = 1.0 + params.beta * p_squared;
  const double longitudinal =
      1.0 + (params.beta + params.beta_prime) * p_squared;
  return std::pow(transverse, static_cast<double>(dimension - 1)) *
         longitudinal;
}

double linearized_jacobian(const BracketSet& brackets, PhaseVector x,
                           PhaseVector p) {
  double j = 1.0;
  for (std::size_t i = 0; i < brackets.dimension(); ++i) {
    j += brackets.xp(i, i, x, p) - 1.0;
  }
  return j;
}

}  // namespace minlen

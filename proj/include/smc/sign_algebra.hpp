// Copyright 2026 the smc-toolkit authors
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

#ifndef SMC_SIGN_ALGEBRA_HPP_
#define SMC_SIGN_ALGEBRA_HPP_

#include <cstdint>
#include <vector>

#include "smc/types.hpp"

namespace smc {

/// Diagonal matrix with entries in {-1, +1}, packed as a bitmask.
/// Bit i set means diagonal entry i is +1. Applying the same pattern twice
/// returns the original vector exactly (entries are exact IEEE +-1).
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(std::uint32_t bits, int dim);

  static SignPattern all_plus(int dim);

  int dim() const { return dim_; }
  std::uint32_t bits() const { return bits_; }
  bool is_plus(int i) const { return (bits_ >> i) & 1u; }
  double entry(int i) const { return is_plus(i) ? 1.0 : -1.0; }

  /// Pattern with diagonal entry i negated.
  SignPattern with_flipped(int i) const;

  /// S * x (component-wise sign flip).
  Vector apply(const Vector& x) const;

  Matrix matrix() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::uint32_t bits_ = 0;
  int dim_ = 0;
};

enum class NormKind { one, two, infinity };

/// diag(sign(x_i)) with sign(0) = +1.
SignPattern sign_matrix(const Vector& x);

/// Component-wise absolute value; equals sign_matrix(x) * x.
Vector abs_vector(const Vector& x);

/// Induced matrix norm. one = max column absolute sum, infinity = max row
/// absolute sum, two = largest singular value (via a symmetric eigensolve of
/// A^T A; exact enough at the dimensions this library handles).
double induced_norm(const Matrix& a, NormKind kind);

/// Minimum of the three induced norms above (square matrices).
double min_induced_norm(const Matrix& a);

/// All 2^m sign patterns, starting at all-+1; pattern k negates exactly the
/// diagonals whose bit is set in k, so the sequence is binary counting.
std::vector<SignPattern> enumerate_sign_patterns(int dim);

const char* norm_kind_name(NormKind kind);

}  // namespace smc

#endif  // SMC_SIGN_ALGEBRA_HPP_

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

#ifndef SMC_CONE_SOLVER_HPP_
#define SMC_CONE_SOLVER_HPP_

#include <vector>

#include "smc/sign_algebra.hpp"
#include "smc/types.hpp"

namespace smc {

/// One instance of the nonlinear control equation u + H|u| = u_c, solved as
/// the piecewise-linear family (S + H) p = u_c over sign patterns S.
/// Solvable with a uniqueness guarantee when some induced norm of H is < 1.
struct SolveInstance {
  Matrix H;
  Vector u_c;
};

struct SolveResult {
  Vector u_hat;       // the solution, u_hat = pattern * magnitudes
  SignPattern pattern;
  Vector magnitudes;  // p >= -eps_zero component-wise
  int patterns_tried = 0;
  bool on_surface = false;  // some |p_i| within the zero tolerance
  double residual = 0.0;    // inf-norm of (pattern + H) p - u_c
};

/// Zero tolerance used for the p >= 0 acceptance test and the surface flag.
/// The sign test of the enumeration algorithm is exact in real arithmetic;
/// in floating point, magnitudes within this band of zero accept either sign
/// bit (surface solutions are shared across adjacent cones).
double zero_tolerance(const Vector& u_c);

/// Solves (S + H) p = u_c by enumerating sign patterns, warm-started at
/// sign_matrix(u_c), and returns the first pattern whose magnitudes are
/// nonnegative (within tolerance). Under the admissibility precondition
/// (some induced norm of H below one) the returned u_hat is unique even when
/// several patterns accept.
SolveResult solve_control_equation(const SolveInstance& instance);

struct ExhaustiveEntry {
  SignPattern pattern;
  Vector magnitudes;
  Vector u_hat;
};

struct ExhaustiveResult {
  std::vector<ExhaustiveEntry> accepted;
  int singular_patterns = 0;

  /// Number of pairwise-distinct u_hat values among accepted entries.
  int distinct_solutions(double tol = 1e-9) const;
};

/// Solves every one of the 2^m patterns and keeps those passing the
/// acceptance test. No admissibility precondition: non-unique solution sets
/// (inadmissible H) can be observed. Oracle for the uniqueness certification.
ExhaustiveResult exhaustive_solutions(const SolveInstance& instance);

enum class ConeStatus { interior, surface, outside };

struct ConeClassification {
  ConeStatus status = ConeStatus::outside;
  Vector witness;  // p = (S + H)^{-1} y
};

/// Locates y relative to the closed convex cone {(S + H) p : p >= 0}.
ConeClassification classify_cone_membership(const SignPattern& pattern,
                                            const Matrix& H, const Vector& y);

/// A constructed instance with two verified distinct solutions, witnessing
/// that the admissibility condition is necessary for symmetric bound
/// matrices.
struct NonuniqueInstance {
  SignPattern v_signs;
  Vector u_c;
  Vector solution_a;
  Vector solution_b;
  double lambda = 0.0;
  Matrix H;  // S(v) * F_bar, ready to feed back into the solvers
};

/// Builds a non-unique instance from a symmetric bound matrix with an
/// eigenvalue of magnitude >= 1. eigen_index selects the eigenvalue in
/// descending order (0 = largest); the associated eigenvector must be
/// one-signed, which the largest eigenvalue of a nonnegative symmetric
/// matrix always provides. Both returned solutions are verified against the
/// original equation before returning.
NonuniqueInstance construct_nonunique_instance(const Matrix& f_bar,
                                               int eigen_index = 0);

const char* cone_status_name(ConeStatus status);

}  // namespace smc

#endif  // SMC_CONE_SOLVER_HPP_

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

#include "smc/cone_solver.hpp"

#include <cmath>
#include <optional>

namespace smc {

namespace {

constexpr double kSingularRatio = 1e-14;

void check_instance(const Matrix& H, const Vector& u_c) {
  const int m = static_cast<int>(u_c.size());
  if (m < 1 || m > kMaxDim) {
    throw Error(ErrorCode::invalid_argument,
                "control dimension out of range: " + std::to_string(m));
  }
  if (H.rows() != m || H.cols() != m) {
    throw Error(ErrorCode::invalid_argument, "H must be m x m");
  }
  if (!H.allFinite() || !u_c.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "non-finite solve instance");
  }
}

// Solves (S + H) p = u_c with partial-pivot LU. Returns nothing when the
// factorization is singular to working precision.
std::optional<Vector> solve_pattern(const SignPattern& pattern,
                                    const Matrix& H, const Vector& u_c) {
  Matrix d = H;
  for (int i = 0; i < pattern.dim(); ++i) d(i, i) += pattern.entry(i);
  Eigen::PartialPivLU<Matrix> lu(d);
  const Vector u_diag = lu.matrixLU().diagonal().cwiseAbs();
  const double u_max = u_diag.maxCoeff();
  if (!(u_max > 0.0) || u_diag.minCoeff() <= kSingularRatio * u_max) {
    return std::nullopt;
  }
  Vector p = lu.solve(u_c);
  if (!p.allFinite()) return std::nullopt;
  return p;
}

bool accepted(const Vector& p, double eps_zero) {
  return p.minCoeff() >= -eps_zero;
}

bool touches_surface(const Vector& p, double eps_zero) {
  return p.cwiseAbs().minCoeff() <= eps_zero;
}

}  // namespace

double zero_tolerance(const Vector& u_c) {
  return 1e-10 * (1.0 + u_c.cwiseAbs().maxCoeff());
}

SolveResult solve_control_equation(const SolveInstance& instance) {
  const Matrix& H = instance.H;
  const Vector& u_c = instance.u_c;
  check_instance(H, u_c);
  const int m = static_cast<int>(u_c.size());
  const double eps_zero = zero_tolerance(u_c);

  const SignPattern warm = sign_matrix(u_c);
  SolveResult result;
  result.patterns_tried = 0;
  int singular_count = 0;

  auto attempt = [&](const SignPattern& pattern) -> bool {
    ++result.patterns_tried;
    auto p = solve_pattern(pattern, H, u_c);
    if (!p) {
      ++singular_count;
      return false;
    }
    if (!accepted(*p, eps_zero)) return false;
    result.pattern = pattern;
    result.magnitudes = *p;
    result.u_hat = pattern.apply(*p);
    result.on_surface = touches_surface(*p, eps_zero);
    Vector r = result.u_hat + H * p->cwiseAbs() - u_c;
    result.residual = r.cwiseAbs().maxCoeff();
    return true;
  };

  if (attempt(warm)) return result;
  for (const SignPattern& pattern : enumerate_sign_patterns(m)) {
    if (pattern == warm) continue;
    if (attempt(pattern)) return result;
  }

  if (singular_count == result.patterns_tried) {
    throw Error(ErrorCode::singular,
                "every sign pattern gave a singular system; admissibility "
                "precondition violated");
  }
  throw Error(ErrorCode::no_solution,
              "no sign pattern accepted; admissibility precondition violated "
              "or numerical breakdown");
}

ExhaustiveResult exhaustive_solutions(const SolveInstance& instance) {
  const Matrix& H = instance.H;
  const Vector& u_c = instance.u_c;
  check_instance(H, u_c);
  const double eps_zero = zero_tolerance(u_c);

  ExhaustiveResult result;
  for (const SignPattern& pattern :
       enumerate_sign_patterns(static_cast<int>(u_c.size()))) {
    auto p = solve_pattern(pattern, H, u_c);
    if (!p) {
      ++result.singular_patterns;
      continue;
    }
    if (!accepted(*p, eps_zero)) continue;
    result.accepted.push_back({pattern, *p, pattern.apply(*p)});
  }
  return result;
}

int ExhaustiveResult::distinct_solutions(double tol) const {
  std::vector<Vector> reps;
  for (const ExhaustiveEntry& entry : accepted) {
    bool fresh = true;
    for (const Vector& r : reps) {
      if ((entry.u_hat - r).cwiseAbs().maxCoeff() <= tol) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(entry.u_hat);
  }
  return static_cast<int>(reps.size());
}

ConeClassification classify_cone_membership(const SignPattern& pattern,
                                            const Matrix& H, const Vector& y) {
  check_instance(H, y);
  if (pattern.dim() != y.size()) {
    throw Error(ErrorCode::invalid_argument, "pattern dimension mismatch");
  }
  auto p = solve_pattern(pattern, H, y);
  if (!p) {
    throw Error(ErrorCode::singular,
                "S + H is singular to working precision");
  }
  const double eps_zero = zero_tolerance(y);
  ConeClassification out;
  out.witness = *p;
  const double min_entry = p->minCoeff();
  if (min_entry > eps_zero) {
    out.status = ConeStatus::interior;
  } else if (min_entry >= -eps_zero) {
    out.status = ConeStatus::surface;
  } else {
    out.status = ConeStatus::outside;
  }
  return out;
}

NonuniqueInstance construct_nonunique_instance(const Matrix& f_bar,
                                               int eigen_index) {
  const int m = static_cast<int>(f_bar.rows());
  if (m < 1 || m > kMaxDim || f_bar.cols() != m) {
    throw Error(ErrorCode::invalid_argument, "F_bar must be square, m <= 16");
  }
  if (!f_bar.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "non-finite F_bar");
  }
  const double scale = f_bar.cwiseAbs().maxCoeff();
  if ((f_bar - f_bar.transpose()).cwiseAbs().maxCoeff() >
      1e-9 * (1.0 + scale)) {
    throw Error(ErrorCode::invalid_argument, "F_bar must be symmetric");
  }
  if (eigen_index < 0 || eigen_index >= m) {
    throw Error(ErrorCode::invalid_argument, "eigen_index out of range");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(f_bar);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::singular, "eigensolve failed");
  }
  // Eigen sorts ascending; index 0 selects the largest eigenvalue.
  const int col = m - 1 - eigen_index;
  const double lambda = solver.eigenvalues()[col];
  if (std::abs(lambda) < 1.0 - 1e-12) {
    throw Error(ErrorCode::invalid_argument,
                "eigenvalue magnitude below one; the non-uniqueness "
                "construction needs |lambda| >= 1");
  }

  Vector y = solver.eigenvectors().col(col);
  y /= y.cwiseAbs().maxCoeff();
  // The construction needs a one-signed eigenvector (available for the
  // dominant eigenvalue of a nonnegative symmetric matrix).
  bool has_pos = false, has_neg = false;
  for (int i = 0; i < m; ++i) {
    if (y[i] > 1e-12) has_pos = true;
    if (y[i] < -1e-12) has_neg = true;
  }
  if (has_pos && has_neg) {
    throw Error(ErrorCode::invalid_argument,
                "selected eigenvector is not one-signed; pick the dominant "
                "eigenvalue of a nonnegative symmetric F_bar");
  }

  NonuniqueInstance out;
  out.lambda = lambda;
  out.v_signs = sign_matrix(y);
  const Vector p = out.v_signs.apply(y);  // |y| >= 0, eigenvector of F_bar
  if ((f_bar * p - lambda * p).cwiseAbs().maxCoeff() >
      1e-9 * std::max(1.0, std::abs(lambda))) {
    throw Error(ErrorCode::internal, "eigenvector residual too large");
  }
  out.H = out.v_signs.matrix() * f_bar;

  const double sgn_lambda = lambda >= 0.0 ? 1.0 : -1.0;
  if (std::abs(std::abs(lambda) - 1.0) <= 1e-12) {
    out.u_c = Vector::Zero(m);
    out.solution_a = Vector::Zero(m);
    out.solution_b = -lambda * out.v_signs.apply(p);
  } else {
    out.u_c = lambda * out.v_signs.apply(p);
    auto branch = [&](double sigma) {
      const Vector p_sigma = lambda / (sigma * sgn_lambda + lambda) * p;
      return (sigma * sgn_lambda) * out.v_signs.apply(p_sigma);
    };
    out.solution_a = branch(1.0);
    out.solution_b = branch(-1.0);
  }

  const double tol = 1e-9 * (1.0 + out.u_c.cwiseAbs().maxCoeff());
  auto residual = [&](const Vector& u_hat) {
    return (u_hat + out.H * u_hat.cwiseAbs() - out.u_c).cwiseAbs().maxCoeff();
  };
  if (residual(out.solution_a) > tol || residual(out.solution_b) > tol) {
    throw Error(ErrorCode::internal,
                "constructed solutions fail the equation residual check");
  }
  return out;
}

const char* cone_status_name(ConeStatus status) {
  switch (status) {
    case ConeStatus::interior: return "interior";
    case ConeStatus::surface: return "surface";
    case ConeStatus::outside: return "outside";
  }
  return "unknown";
}

}  // namespace smc

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

#include "smc/sign_algebra.hpp"

#include <cmath>

namespace smc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::config: return "config";
    case ErrorCode::no_solution: return "no_solution";
    case ErrorCode::singular: return "singular";
    case ErrorCode::not_admissible: return "not_admissible";
    case ErrorCode::guard: return "guard";
    case ErrorCode::not_certifiable: return "not_certifiable";
    case ErrorCode::property_failed: return "property_failed";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

const char* norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::one: return "one";
    case NormKind::two: return "two";
    case NormKind::infinity: return "infinity";
  }
  return "unknown";
}

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::invalid_argument,
                "dimension must be in [1, " + std::to_string(kMaxDim) +
                    "], got " + std::to_string(dim));
  }
}

void check_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " has non-finite entries");
  }
}

}  // namespace

SignPattern::SignPattern(std::uint32_t bits, int dim) : bits_(bits), dim_(dim) {
  check_dim(dim);
  bits_ &= (dim == 32 ? ~0u : ((1u << dim) - 1u));
}

SignPattern SignPattern::all_plus(int dim) {
  check_dim(dim);
  return SignPattern((1u << dim) - 1u, dim);
}

SignPattern SignPattern::with_flipped(int i) const {
  return SignPattern(bits_ ^ (1u << i), dim_);
}

Vector SignPattern::apply(const Vector& x) const {
  if (x.size() != dim_) {
    throw Error(ErrorCode::invalid_argument,
                "sign pattern dimension mismatch");
  }
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = is_plus(i) ? x[i] : -x[i];
  return out;
}

Matrix SignPattern::matrix() const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) out(i, i) = entry(i);
  return out;
}

SignPattern sign_matrix(const Vector& x) {
  check_dim(static_cast<int>(x.size()));
  check_finite(x, "vector");
  std::uint32_t bits = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] >= 0.0) bits |= (1u << i);
  }
  return SignPattern(bits, static_cast<int>(x.size()));
}

Vector abs_vector(const Vector& x) {
  check_finite(x, "vector");
  return x.cwiseAbs();
}

double induced_norm(const Matrix& a, NormKind kind) {
  check_finite(a, "matrix");
  if (a.rows() == 0 || a.cols() == 0) {
    throw Error(ErrorCode::invalid_argument, "empty matrix");
  }
  switch (kind) {
    case NormKind::one:
      return a.cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::infinity:
      return a.cwiseAbs().rowwise().sum().maxCoeff();
    case NormKind::two: {
      if (a.rows() != a.cols()) {
        throw Error(ErrorCode::invalid_argument,
                    "two-norm requires a square matrix");
      }
      Eigen::SelfAdjointEigenSolver<Matrix> solver(a.transpose() * a);
      if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::singular, "eigensolve failed in two-norm");
      }
      double lambda_max = solver.eigenvalues().maxCoeff();
      return std::sqrt(std::max(lambda_max, 0.0));
    }
  }
  throw Error(ErrorCode::internal, "unreachable norm kind");
}

double min_induced_norm(const Matrix& a) {
  double best = induced_norm(a, NormKind::one);
  best = std::min(best, induced_norm(a, NormKind::two));
  best = std::min(best, induced_norm(a, NormKind::infinity));
  return best;
}

std::vector<SignPattern> enumerate_sign_patterns(int dim) {
  check_dim(dim);
  const std::uint32_t count = 1u << dim;
  const std::uint32_t mask = count - 1u;
  std::vector<SignPattern> patterns;
  patterns.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    patterns.emplace_back(~k & mask, dim);
  }
  return patterns;
}

}  // namespace smc

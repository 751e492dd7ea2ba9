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

#include "smc/controller.hpp"

#include <cmath>

namespace smc {

namespace {

constexpr double kSingularRatio = 1e-14;

Matrix checked_inverse(const Matrix& a, const char* what) {
  Eigen::PartialPivLU<Matrix> lu(a);
  const Vector u_diag = lu.matrixLU().diagonal().cwiseAbs();
  const double u_max = u_diag.maxCoeff();
  if (!(u_max > 0.0) || u_diag.minCoeff() <= kSingularRatio * u_max) {
    throw Error(ErrorCode::singular,
                std::string(what) + " is singular to working precision");
  }
  return lu.inverse();
}

}  // namespace

GainDecomposition GainDecomposition::make(const Matrix& M, const Matrix& Q,
                                          const Matrix& F_bar) {
  const int m = static_cast<int>(M.rows());
  if (m < 1 || m > kMaxDim || M.cols() != m || Q.rows() != m ||
      Q.cols() != m || F_bar.rows() != m || F_bar.cols() != m) {
    throw Error(ErrorCode::invalid_argument,
                "decomposition matrices must share one square shape, m <= 16");
  }
  if (!M.allFinite() || !Q.allFinite() || !F_bar.allFinite()) {
    throw Error(ErrorCode::invalid_argument,
                "non-finite decomposition matrix");
  }
  if (F_bar.minCoeff() < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "upper bound matrix must be element-wise nonnegative");
  }
  GainDecomposition out;
  out.m_ = M;
  out.q_ = Q;
  out.f_bar_ = F_bar;
  out.m_inv_ = checked_inverse(M, "decomposition factor M");
  out.q_inv_ = checked_inverse(Q, "decomposition factor Q");
  out.norm_one_ = induced_norm(F_bar, NormKind::one);
  out.norm_two_ = induced_norm(F_bar, NormKind::two);
  out.norm_inf_ = induced_norm(F_bar, NormKind::infinity);
  return out;
}

double GainDecomposition::norm(NormKind kind) const {
  switch (kind) {
    case NormKind::one: return norm_one_;
    case NormKind::two: return norm_two_;
    case NormKind::infinity: return norm_inf_;
  }
  throw Error(ErrorCode::internal, "unreachable norm kind");
}

double GainDecomposition::min_norm() const {
  return std::min(norm_one_, std::min(norm_two_, norm_inf_));
}

void ControllerConfig::validate() const {
  const int m = dim();
  if (m < 1) {
    throw Error(ErrorCode::config, "controller.decomposition is not set");
  }
  if (!(rho > 0.0)) {
    throw Error(ErrorCode::config, "controller.rho must be > 0");
  }
  if (f_bar.size() != m || eta_bar.size() != m) {
    throw Error(ErrorCode::config,
                "controller bound vectors must have the control dimension");
  }
  if (f_bar.minCoeff() < 0.0 || eta_bar.minCoeff() < 0.0) {
    throw Error(ErrorCode::config,
                "controller bound vectors must be nonnegative");
  }
  if (smoothing && (delta_s < 0.0 || delta_v < 0.0)) {
    throw Error(ErrorCode::config, "smoothing widths must be nonnegative");
  }
}

double smooth_sign(double value, double delta) {
  if (delta < 0.0) {
    throw Error(ErrorCode::invalid_argument, "delta must be nonnegative");
  }
  if (std::abs(value) >= delta) return value >= 0.0 ? 1.0 : -1.0;
  return value / delta;
}

Vector reaching_term(const Vector& f0, const Vector& s,
                     const ControllerConfig& cfg) {
  cfg.validate();
  const int m = cfg.dim();
  if (f0.size() != m || s.size() != m) {
    throw Error(ErrorCode::invalid_argument, "f0 and s must have dimension m");
  }
  const Vector bounds = cfg.f_bar + cfg.eta_bar;
  Vector switched(m);
  for (int i = 0; i < m; ++i) {
    const double sgn =
        cfg.smoothing ? smooth_sign(s[i], cfg.delta_s) : smooth_sign(s[i], 0.0);
    switched[i] = sgn * bounds[i];
  }
  return -(cfg.decomposition.M_inverse() * (f0 + switched + cfg.rho * s));
}

ControlOutput compute_control(const Vector& f0, const Vector& s,
                              const ControllerConfig& cfg) {
  if (!cfg.decomposition.admissible()) {
    throw Error(ErrorCode::not_admissible,
                "no induced norm of F_bar is below one");
  }
  ControlOutput out;
  out.u_c = reaching_term(f0, s, cfg);

  const int m = cfg.dim();
  const Vector v = cfg.decomposition.M() * s;
  Vector v_signs(m);
  for (int i = 0; i < m; ++i) {
    v_signs[i] =
        cfg.smoothing ? smooth_sign(v[i], cfg.delta_v) : smooth_sign(v[i], 0.0);
  }
  const Matrix H = v_signs.asDiagonal() * cfg.decomposition.F_bar();

  out.solver = solve_control_equation({H, out.u_c});
  out.u_hat = out.solver.u_hat;
  out.u = cfg.decomposition.Q_inverse() * out.u_hat;

  const double check =
      (cfg.decomposition.Q() * out.u - out.u_hat).cwiseAbs().maxCoeff();
  if (check > 1e-12 * (1.0 + out.u_hat.cwiseAbs().maxCoeff())) {
    throw Error(ErrorCode::internal, "u = Q^{-1} u_hat recomputation failed");
  }
  return out;
}

AdmissibilityReport check_admissibility(const Matrix& F_bar) {
  const int m = static_cast<int>(F_bar.rows());
  if (m < 1 || F_bar.cols() != m) {
    throw Error(ErrorCode::invalid_argument, "F_bar must be square");
  }
  if (!F_bar.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "non-finite F_bar");
  }
  if (F_bar.minCoeff() < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "F_bar must be element-wise nonnegative");
  }
  AdmissibilityReport report;
  report.norm_one = induced_norm(F_bar, NormKind::one);
  report.norm_two = induced_norm(F_bar, NormKind::two);
  report.norm_infinity = induced_norm(F_bar, NormKind::infinity);
  report.max_element = F_bar.maxCoeff();
  report.admissible = std::min(report.norm_one,
                               std::min(report.norm_two,
                                        report.norm_infinity)) < 1.0;
  report.max_element_rule = report.max_element < 1.0 / m;
  return report;
}

}  // namespace smc

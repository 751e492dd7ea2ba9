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

#ifndef SMC_CONTROLLER_HPP_
#define SMC_CONTROLLER_HPP_

#include "smc/cone_solver.hpp"
#include "smc/sign_algebra.hpp"
#include "smc/types.hpp"

namespace smc {

/// Factorization G0 = M * Q of the nominal gain, together with the
/// element-wise upper bound F_bar on the normalized uncertainty
/// M^{-1} dG Q^{-1}. Inverses and the three induced norms of F_bar are
/// computed once at construction.
class GainDecomposition {
 public:
  GainDecomposition() = default;  // empty; fill via make()

  static GainDecomposition make(const Matrix& M, const Matrix& Q,
                                const Matrix& F_bar);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& M() const { return m_; }
  const Matrix& Q() const { return q_; }
  const Matrix& F_bar() const { return f_bar_; }
  const Matrix& M_inverse() const { return m_inv_; }
  const Matrix& Q_inverse() const { return q_inv_; }
  Matrix G0() const { return m_ * q_; }

  double norm(NormKind kind) const;
  double min_norm() const;
  /// True when some induced norm of F_bar is below one (unique-solution
  /// regime of the control equation).
  bool admissible() const { return min_norm() < 1.0; }

 private:
  Matrix m_, q_, f_bar_, m_inv_, q_inv_;
  double norm_one_ = 0.0, norm_two_ = 0.0, norm_inf_ = 0.0;
};

struct ControllerConfig {
  double rho = 0.0;     // reaching gain, > 0
  Vector f_bar;         // bound on the drift uncertainty, component-wise
  Vector eta_bar;       // bound on the disturbance, component-wise
  GainDecomposition decomposition;
  bool smoothing = false;
  double delta_s = 1e-3;  // boundary-layer width for sign(s)
  double delta_v = 1e-3;  // boundary-layer width for sign(v)

  int dim() const { return decomposition.dim(); }
  void validate() const;
};

struct ControlOutput {
  Vector u;      // physical control, u = Q^{-1} u_hat
  Vector u_hat;
  Vector u_c;
  SolveResult solver;
};

/// Saturated sign: sign(value) outside the band |value| < delta, value/delta
/// inside. delta = 0 degenerates to the exact sign with sign(0) = +1.
double smooth_sign(double value, double delta);

/// The reaching-law right-hand side u_c = -M^{-1}(f0 + S(s)(f_bar + eta_bar)
/// + rho s), with the sign matrix replaced by its saturated version when
/// smoothing is enabled.
Vector reaching_term(const Vector& f0, const Vector& s,
                     const ControllerConfig& cfg);

/// Full control computation: assembles u_c, solves the nonlinear control
/// equation with H built from sign(v), v = M s (saturated diagonal when
/// smoothing is on; row scaling by values in [-1, 1] cannot increase the
/// norms, so admissibility carries over), and maps back through Q^{-1}.
ControlOutput compute_control(const Vector& f0, const Vector& s,
                              const ControllerConfig& cfg);

struct AdmissibilityReport {
  bool admissible = false;       // some induced norm of F_bar below 1
  double norm_one = 0.0;
  double norm_two = 0.0;
  double norm_infinity = 0.0;
  double max_element = 0.0;
  // The stricter element-wise condition max |F_ij| < 1/m required by earlier
  // adaptive SMC work; reported alongside to show the gap.
  bool max_element_rule = false;
};

/// Evaluates the solvability condition for a nonnegative bound matrix.
AdmissibilityReport check_admissibility(const Matrix& F_bar);

}  // namespace smc

#endif  // SMC_CONTROLLER_HPP_

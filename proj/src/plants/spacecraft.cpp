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

#include "smc/plants/spacecraft.hpp"

#include <cmath>

#include "smc/random.hpp"

namespace smc {

namespace {

constexpr double kDegree = M_PI / 180.0;
constexpr double kSingularRatio = 1e-14;

// Drift G_x and input map G_u of the acceleration equations
// N [dv_z, ddtheta, ddpsi]^T = G_x + G_u u.
Eigen::Vector3d drift_vector(const SpacecraftParams& p,
                             const SpacecraftState& x) {
  const double sp = std::sin(x.psi);
  const double cp = std::cos(x.psi);
  const double total = p.m + p.m_f;
  Eigen::Vector3d g;
  g[0] = total * x.theta_dot * x.v_x +
         p.m_f * p.a * (x.theta_dot + x.psi_dot) * (x.theta_dot + x.psi_dot) *
             sp;
  g[1] = p.m * p.b * x.theta_dot * x.v_x;
  g[2] = -p.epsilon * x.psi_dot - p.m_f * p.a * p.F_thrust / total * sp +
         p.m_f * p.a * x.theta_dot * x.v_x * cp;
  return g;
}

Eigen::Matrix<double, 3, 2> input_map(const SpacecraftParams& p) {
  Eigen::Matrix<double, 3, 2> g_u;
  g_u << 1.0, 0.0, p.b, 1.0, 0.0, 0.0;
  return g_u;
}

// Solves N z = rhs for several right-hand sides at once.
Eigen::Matrix<double, 3, 3> solve_accelerations(const SpacecraftParams& p,
                                                const SpacecraftState& x) {
  const Eigen::Matrix3d n = spacecraft_mass_matrix(p, x.psi);
  Eigen::PartialPivLU<Eigen::Matrix3d> lu(n);
  const Eigen::Vector3d u_diag = lu.matrixLU().diagonal().cwiseAbs();
  const double u_max = u_diag.maxCoeff();
  if (!(u_max > 0.0) || u_diag.minCoeff() <= kSingularRatio * u_max) {
    throw Error(ErrorCode::singular, "singular slosh mass matrix N(psi)");
  }
  Eigen::Matrix<double, 3, 3> rhs;
  rhs.col(0) = drift_vector(p, x);
  rhs.rightCols<2>() = input_map(p);
  // Columns: drift accelerations, then the two control columns.
  return lu.solve(rhs);
}

}  // namespace

void SpacecraftParams::validate(double k) const {
  if (!(m > 0.0 && m_f > 0.0 && I > 0.0 && I_f > 0.0 && a > 0.0)) {
    throw Error(ErrorCode::config,
                "spacecraft masses, inertias and pendulum length must be > 0");
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::config, "spacecraft damping must be >= 0");
  }
  if (k < 1.0) {
    throw Error(ErrorCode::config, "uncertainty scale k must be >= 1");
  }
  const double worst =
      std::max({k * bounds.m, k * bounds.m_f, k * bounds.I_f, k * bounds.a,
                k * bounds.epsilon});
  if (worst >= 1.0) {
    throw Error(ErrorCode::config,
                "infeasible uncertainty scale: k * bound must stay below 1");
  }
}

SpacecraftParams spacecraft_benchmark_nominal() {
  SpacecraftParams p;
  p.m = 600.0;
  p.m_f = 1000.0;
  p.I = 720.0;
  p.I_f = 90.0;
  p.a = 0.32;
  p.b = 0.25;
  p.F_thrust = 1000.0;
  p.epsilon = 0.0019;
  p.bounds = {0.1, 0.1, 0.05, 0.05, 0.03};
  return p;
}

SpacecraftState spacecraft_benchmark_initial_state() {
  SpacecraftState x;
  x.v_z = 105.0;
  x.theta = 2.0 * kDegree;
  x.theta_dot = 0.57 * kDegree;
  x.psi = 5.0 * kDegree;
  x.psi_dot = 0.5 * kDegree;
  x.v_x = 3000.0;
  return x;
}

SpacecraftParams sample_spacecraft_params(const SpacecraftParams& nominal,
                                          double k, std::uint64_t seed) {
  nominal.validate(k);
  Rng rng(seed);
  SpacecraftParams out = nominal;
  auto perturb = [&](double value, double bound) {
    return value * (1.0 + k * uniform(rng, -bound, bound));
  };
  out.m = perturb(nominal.m, nominal.bounds.m);
  out.m_f = perturb(nominal.m_f, nominal.bounds.m_f);
  out.I_f = perturb(nominal.I_f, nominal.bounds.I_f);
  out.a = perturb(nominal.a, nominal.bounds.a);
  out.epsilon = perturb(nominal.epsilon, nominal.bounds.epsilon);
  return out;
}

Eigen::Matrix3d spacecraft_mass_matrix(const SpacecraftParams& p, double psi) {
  const double cp = std::cos(psi);
  const double total = p.m + p.m_f;
  const double ma = p.m_f * p.a;
  Eigen::Matrix3d n;
  n << total, ma * cp + p.m * p.b, ma * cp,
       p.m * p.b, p.I + p.m * p.b * p.b, 0.0,
       ma * cp, p.I_f + ma * p.a, p.I_f + ma * p.a;
  return n;
}

SpacecraftState spacecraft_derivative(const SpacecraftState& x,
                                      const Eigen::Vector2d& u,
                                      const SpacecraftParams& params,
                                      AxialVelocityMode mode) {
  const Eigen::Matrix<double, 3, 3> solved = solve_accelerations(params, x);
  const Eigen::Vector3d accel =
      solved.col(0) + solved.rightCols<2>() * u;

  SpacecraftState d;
  d.v_z = accel[0];
  d.theta = x.theta_dot;
  d.theta_dot = accel[1];
  d.psi = x.psi_dot;
  d.psi_dot = accel[2];
  d.v_x = mode == AxialVelocityMode::thrust
              ? params.F_thrust / (params.m + params.m_f)
              : 0.0;
  d.integral_e = Eigen::Vector2d(x.theta, x.psi);
  return d;
}

Eigen::Vector2d spacecraft_sliding_vars(const SpacecraftState& x,
                                        double lambda1, double lambda2) {
  if (!(lambda1 > 0.0 && lambda2 > 0.0)) {
    throw Error(ErrorCode::config, "sliding gains must be > 0");
  }
  Eigen::Vector2d e(x.theta, x.psi);
  Eigen::Vector2d e_dot(x.theta_dot, x.psi_dot);
  return e_dot + lambda1 * e + lambda2 * x.integral_e;
}

void spacecraft_sliding_dynamics(const SpacecraftState& x,
                                 const SpacecraftParams& params,
                                 double lambda1, double lambda2,
                                 Eigen::Vector2d* f, Eigen::Matrix2d* G) {
  const Eigen::Matrix<double, 3, 3> solved = solve_accelerations(params, x);
  if (f != nullptr) {
    (*f)[0] = solved(1, 0) + lambda1 * x.theta_dot + lambda2 * x.theta;
    (*f)[1] = solved(2, 0) + lambda1 * x.psi_dot + lambda2 * x.psi;
  }
  if (G != nullptr) {
    *G = solved.bottomRightCorner<2, 2>();
  }
}

Eigen::Matrix2d spacecraft_gain(const SpacecraftParams& params, double psi) {
  SpacecraftState x;
  x.psi = psi;
  const Eigen::Matrix<double, 3, 3> solved = solve_accelerations(params, x);
  return solved.bottomRightCorner<2, 2>();
}

}  // namespace smc

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

#ifndef SMC_PLANTS_SPACECRAFT_HPP_
#define SMC_PLANTS_SPACECRAFT_HPP_

#include <cstdint>

#include "smc/types.hpp"

namespace smc {

// Planar liquid-filled spacecraft with the fuel slosh modeled as a pendulum.
// Controls are the transverse jet force and the pitching moment; the control
// goal is to null the attitude angle, the slosh angle, and the transverse
// velocity.

struct SpacecraftBounds {
  double m = 0.0;        // relative bound on the spacecraft mass
  double m_f = 0.0;      // relative bound on the fuel mass
  double I_f = 0.0;      // relative bound on the fuel inertia
  double a = 0.0;        // relative bound on the pendulum length
  double epsilon = 0.0;  // relative bound on the slosh damping
};

struct SpacecraftParams {
  double m = 0.0;         // spacecraft mass [kg]
  double m_f = 0.0;       // fuel mass [kg]
  double I = 0.0;         // inertia without fuel [kg m^2]; certain
  double I_f = 0.0;       // fuel inertia [kg m^2]
  double a = 0.0;         // pendulum length [m]
  double b = 0.0;         // pendulum attachment offset [m]; certain
  double F_thrust = 0.0;  // axial thrust [N]
  double epsilon = 0.0;   // slosh damping coefficient
  SpacecraftBounds bounds;

  void validate(double k) const;
};

struct SpacecraftState {
  double v_z = 0.0;        // transverse velocity [m/s]
  double theta = 0.0;      // attitude angle [rad]
  double theta_dot = 0.0;  // [rad/s]
  double psi = 0.0;        // fuel slosh angle [rad]
  double psi_dot = 0.0;    // [rad/s]
  double v_x = 0.0;        // axial velocity [m/s]
  Eigen::Vector2d integral_e = Eigen::Vector2d::Zero();  // accumulated
                                                         // integral of
                                                         // (theta, psi)
};

enum class AxialVelocityMode {
  thrust,    // v_x driven by the axial thrust over the total mass
  constant,  // v_x held at its initial value
};

/// Benchmark nominal parameters and uncertainty bounds.
SpacecraftParams spacecraft_benchmark_nominal();

/// Benchmark initial condition (angles converted to radians).
SpacecraftState spacecraft_benchmark_initial_state();

/// Draws true parameter values: each bounded parameter gets an independent
/// uniform basic uncertainty in [-bound, +bound], scaled by k. I and b carry
/// no bound and stay at their nominal values. Deterministic per seed.
SpacecraftParams sample_spacecraft_params(const SpacecraftParams& nominal,
                                          double k, std::uint64_t seed);

/// Slosh-coupled mass matrix N(psi) of the acceleration equations.
Eigen::Matrix3d spacecraft_mass_matrix(const SpacecraftParams& p, double psi);

/// Time derivative of the full simulation state under the given parameters.
/// u = (jet force, pitching moment). Throws when N(psi) is singular to
/// working precision.
SpacecraftState spacecraft_derivative(const SpacecraftState& x,
                                      const Eigen::Vector2d& u,
                                      const SpacecraftParams& params,
                                      AxialVelocityMode mode);

/// Sliding variables s = e_dot + lambda1 e + lambda2 integral(e) with
/// e = (theta, psi).
Eigen::Vector2d spacecraft_sliding_vars(const SpacecraftState& x,
                                        double lambda1, double lambda2);

/// Drift f(x) and gain G(x) of the sliding dynamics s_dot = f + G u,
/// evaluated under the given parameter set.
void spacecraft_sliding_dynamics(const SpacecraftState& x,
                                 const SpacecraftParams& params,
                                 double lambda1, double lambda2,
                                 Eigen::Vector2d* f, Eigen::Matrix2d* G);

/// Gain G(x) only; used when building uncertainty sample sets (G depends on
/// the state through psi alone).
Eigen::Matrix2d spacecraft_gain(const SpacecraftParams& params, double psi);

}  // namespace smc

#endif  // SMC_PLANTS_SPACECRAFT_HPP_

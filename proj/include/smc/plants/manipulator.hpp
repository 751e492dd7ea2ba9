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

#ifndef SMC_PLANTS_MANIPULATOR_HPP_
#define SMC_PLANTS_MANIPULATOR_HPP_

#include "smc/types.hpp"

namespace smc {

// Two-link manipulator with point masses at the link ends and absolute joint
// angles measured from the upright vertical. Inputs are the joint torques.

struct ManipulatorParams {
  double m1 = 0.0;  // link masses [kg]
  double m2 = 0.0;
  double l1 = 0.0;  // link lengths [m]
  double l2 = 0.0;
  double g = 9.81;  // gravitational acceleration [m/s^2]

  void validate() const;
};

struct ManipulatorRanges {
  double m1_lo = 0.0, m1_hi = 0.0;
  double m2_lo = 0.0, m2_hi = 0.0;
  double l1_lo = 0.0, l1_hi = 0.0;
  double l2_lo = 0.0, l2_hi = 0.0;

  ManipulatorParams midpoint(double g) const;
  bool contains(const ManipulatorParams& p) const;
};

/// Benchmark uncertainty ranges for the four parameters.
ManipulatorRanges manipulator_benchmark_ranges();

struct ManipulatorState {
  double q1 = 0.0;      // [rad]
  double q1_dot = 0.0;  // [rad/s]
  double q2 = 0.0;
  double q2_dot = 0.0;
};

struct TargetPoint {
  Eigen::Vector2d q_d;
  Eigen::Vector2d q_dot_d;
  Eigen::Vector2d q_ddot_d;
};

/// Benchmark reference: q_id = 0.01 sin(5 t + pi/2) for both joints, with
/// analytic first and second derivatives.
TargetPoint target_trajectory(double t);

/// Joint accelerations from the closed-form dynamics; u is the torque pair.
ManipulatorState manipulator_derivative(const ManipulatorState& x,
                                        const Eigen::Vector2d& u,
                                        const ManipulatorParams& params);

/// Sliding variables s = e_dot + alpha e with e = q - q_d.
Eigen::Vector2d manipulator_sliding_vars(const ManipulatorState& x,
                                         const TargetPoint& target,
                                         double alpha);

/// Drift f(x) and gain G(x) of s_dot = f + G u under the given parameters.
/// The drift uses the analytic target acceleration.
void manipulator_sliding_dynamics(const ManipulatorState& x,
                                  const TargetPoint& target,
                                  const ManipulatorParams& params,
                                  double alpha, Eigen::Vector2d* f,
                                  Eigen::Matrix2d* G);

/// Torque-to-acceleration gain (the inverse inertia matrix); depends on the
/// state only through q1 - q2.
Eigen::Matrix2d manipulator_gain(const ManipulatorParams& params, double q1,
                                 double q2);

/// Total mechanical energy (kinetic plus gravitational, upright-vertical
/// convention); conserved by the unforced dynamics.
double manipulator_energy(const ManipulatorState& x,
                          const ManipulatorParams& params);

}  // namespace smc

#endif  // SMC_PLANTS_MANIPULATOR_HPP_

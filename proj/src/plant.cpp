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

#include "smc/plant.hpp"

#include <cmath>

namespace smc {

SpacecraftPlant::SpacecraftPlant(SpacecraftParams nominal,
                                 SpacecraftParams true_params,
                                 SpacecraftState initial, double lambda1,
                                 double lambda2, AxialVelocityMode mode)
    : nominal_(nominal),
      true_(true_params),
      initial_(initial),
      lambda1_(lambda1),
      lambda2_(lambda2),
      mode_(mode) {
  if (!(lambda1 > 0.0 && lambda2 > 0.0)) {
    throw Error(ErrorCode::config, "sliding gains must be > 0");
  }
}

std::vector<std::string> SpacecraftPlant::state_names() const {
  return {"v_z",     "theta", "theta_dot", "psi",
          "psi_dot", "v_x",   "ie_theta",  "ie_psi"};
}

SpacecraftState SpacecraftPlant::unpack(const Vector& x) {
  SpacecraftState s;
  s.v_z = x[0];
  s.theta = x[1];
  s.theta_dot = x[2];
  s.psi = x[3];
  s.psi_dot = x[4];
  s.v_x = x[5];
  s.integral_e = Eigen::Vector2d(x[6], x[7]);
  return s;
}

Vector SpacecraftPlant::pack(const SpacecraftState& s) {
  Vector x(8);
  x << s.v_z, s.theta, s.theta_dot, s.psi, s.psi_dot, s.v_x, s.integral_e[0],
      s.integral_e[1];
  return x;
}

Vector SpacecraftPlant::initial_state() const { return pack(initial_); }

Vector SpacecraftPlant::derivative(double, const Vector& x,
                                   const Vector& u) const {
  const SpacecraftState s = unpack(x);
  return pack(spacecraft_derivative(s, Eigen::Vector2d(u[0], u[1]), true_,
                                    mode_));
}

SlidingEval SpacecraftPlant::sliding(double, const Vector& x) const {
  const SpacecraftState s = unpack(x);
  SlidingEval out;
  out.s = spacecraft_sliding_vars(s, lambda1_, lambda2_);
  Eigen::Vector2d f;
  Eigen::Matrix2d g;
  spacecraft_sliding_dynamics(s, nominal_, lambda1_, lambda2_, &f, &g);
  out.f0 = f;
  out.G0 = g;
  return out;
}

void SpacecraftPlant::true_sliding_dynamics(double, const Vector& x, Vector* f,
                                            Matrix* G) const {
  const SpacecraftState s = unpack(x);
  Eigen::Vector2d ff;
  Eigen::Matrix2d gg;
  spacecraft_sliding_dynamics(s, true_, lambda1_, lambda2_, &ff, &gg);
  if (f != nullptr) *f = ff;
  if (G != nullptr) *G = gg;
}

void SpacecraftPlant::check_guards(const Vector& x) const {
  if (!x.allFinite()) {
    throw Error(ErrorCode::guard, "spacecraft state became non-finite");
  }
  if (std::abs(x[3]) >= M_PI / 2.0) {
    throw Error(ErrorCode::guard,
                "slosh angle left the pendulum model regime (|psi| >= pi/2)");
  }
}

ManipulatorPlant::ManipulatorPlant(ManipulatorParams nominal,
                                   ManipulatorParams true_params,
                                   ManipulatorState initial, double alpha)
    : nominal_(nominal), true_(true_params), initial_(initial), alpha_(alpha) {
  nominal.validate();
  true_params.validate();
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::config, "sliding gain alpha must be > 0");
  }
}

std::vector<std::string> ManipulatorPlant::state_names() const {
  return {"q1", "q1_dot", "q2", "q2_dot"};
}

ManipulatorState ManipulatorPlant::unpack(const Vector& x) {
  ManipulatorState s;
  s.q1 = x[0];
  s.q1_dot = x[1];
  s.q2 = x[2];
  s.q2_dot = x[3];
  return s;
}

Vector ManipulatorPlant::pack(const ManipulatorState& s) {
  Vector x(4);
  x << s.q1, s.q1_dot, s.q2, s.q2_dot;
  return x;
}

Vector ManipulatorPlant::initial_state() const { return pack(initial_); }

Vector ManipulatorPlant::derivative(double, const Vector& x,
                                    const Vector& u) const {
  const ManipulatorState s = unpack(x);
  const ManipulatorState d =
      manipulator_derivative(s, Eigen::Vector2d(u[0], u[1]), true_);
  Vector out(4);
  out << d.q1, d.q1_dot, d.q2, d.q2_dot;
  return out;
}

SlidingEval ManipulatorPlant::sliding(double t, const Vector& x) const {
  const ManipulatorState s = unpack(x);
  const TargetPoint target = target_trajectory(t);
  SlidingEval out;
  out.s = manipulator_sliding_vars(s, target, alpha_);
  Eigen::Vector2d f;
  Eigen::Matrix2d g;
  manipulator_sliding_dynamics(s, target, nominal_, alpha_, &f, &g);
  out.f0 = f;
  out.G0 = g;
  return out;
}

void ManipulatorPlant::true_sliding_dynamics(double t, const Vector& x,
                                             Vector* f, Matrix* G) const {
  const ManipulatorState s = unpack(x);
  const TargetPoint target = target_trajectory(t);
  Eigen::Vector2d ff;
  Eigen::Matrix2d gg;
  manipulator_sliding_dynamics(s, target, true_, alpha_, &ff, &gg);
  if (f != nullptr) *f = ff;
  if (G != nullptr) *G = gg;
}

void ManipulatorPlant::check_guards(const Vector& x) const {
  if (!x.allFinite()) {
    throw Error(ErrorCode::guard, "manipulator state became non-finite");
  }
}

}  // namespace smc

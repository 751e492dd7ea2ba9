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

#include "smc/plants/manipulator.hpp"

#include <cmath>

namespace smc {

namespace {

// Shared trigonometric quantities: s1 = sin(q1), c1 = cos(q1),
// s3 = sin(q2), c3 = cos(q2); sigma = sin(q1 - q2), cd = cos(q1 - q2).
struct Trig {
  double s1, c1, s3, c3, sigma, cd;
};

Trig trig(const ManipulatorState& x) {
  Trig t;
  t.s1 = std::sin(x.q1);
  t.c1 = std::cos(x.q1);
  t.s3 = std::sin(x.q2);
  t.c3 = std::cos(x.q2);
  t.sigma = t.s1 * t.c3 - t.c1 * t.s3;
  t.cd = t.s1 * t.s3 + t.c1 * t.c3;
  return t;
}

// (m1 + m2) - m2 cos^2(q1 - q2), bounded below by m1 > 0.
double inertia_denominator(const ManipulatorParams& p, const Trig& t) {
  const double d = (p.m1 + p.m2) - p.m2 * t.cd * t.cd;
  if (!(d > 0.0)) {
    throw Error(ErrorCode::singular, "degenerate manipulator inertia");
  }
  return d;
}

}  // namespace

void ManipulatorParams::validate() const {
  if (!(m1 > 0.0 && m2 > 0.0 && l1 > 0.0 && l2 > 0.0)) {
    throw Error(ErrorCode::config,
                "manipulator masses and lengths must be > 0");
  }
  if (g < 0.0) {
    throw Error(ErrorCode::config, "gravity must be >= 0");
  }
}

ManipulatorParams ManipulatorRanges::midpoint(double g) const {
  ManipulatorParams p;
  p.m1 = 0.5 * (m1_lo + m1_hi);
  p.m2 = 0.5 * (m2_lo + m2_hi);
  p.l1 = 0.5 * (l1_lo + l1_hi);
  p.l2 = 0.5 * (l2_lo + l2_hi);
  p.g = g;
  return p;
}

bool ManipulatorRanges::contains(const ManipulatorParams& p) const {
  return p.m1 >= m1_lo && p.m1 <= m1_hi && p.m2 >= m2_lo && p.m2 <= m2_hi &&
         p.l1 >= l1_lo && p.l1 <= l1_hi && p.l2 >= l2_lo && p.l2 <= l2_hi;
}

ManipulatorRanges manipulator_benchmark_ranges() {
  ManipulatorRanges r;
  r.m1_lo = 0.7;
  r.m1_hi = 1.1;
  r.m2_lo = 0.8;
  r.m2_hi = 1.4;
  r.l1_lo = 0.9;
  r.l1_hi = 1.3;
  r.l2_lo = 0.8;
  r.l2_hi = 1.3;
  return r;
}

TargetPoint target_trajectory(double t) {
  if (t < 0.0) {
    throw Error(ErrorCode::invalid_argument, "time must be nonnegative");
  }
  const double phase = 5.0 * t + M_PI / 2.0;
  const double q = 0.01 * std::sin(phase);
  const double q_dot = 0.05 * std::cos(phase);
  const double q_ddot = -0.25 * std::sin(phase);
  TargetPoint target;
  target.q_d = Eigen::Vector2d::Constant(q);
  target.q_dot_d = Eigen::Vector2d::Constant(q_dot);
  target.q_ddot_d = Eigen::Vector2d::Constant(q_ddot);
  return target;
}

ManipulatorState manipulator_derivative(const ManipulatorState& x,
                                        const Eigen::Vector2d& u,
                                        const ManipulatorParams& p) {
  p.validate();
  const Trig t = trig(x);
  const double den = p.l1 * p.l2 * inertia_denominator(p, t);
  const double w1 = x.q1_dot * x.q1_dot;
  const double w2 = x.q2_dot * x.q2_dot;

  const double a2 =
      (t.sigma * (-p.m2 * p.l1 * p.l2 * t.cd * w1 - p.m2 * p.l2 * p.l2 * w2) +
       (p.m1 + p.m2) * p.l2 * p.g * t.s1 -
       p.m2 * p.l2 * p.g * t.s3 * t.cd) /
      den;
  const double a4 =
      (t.sigma *
           ((p.m1 + p.m2) * p.l1 * p.l1 * w1 + p.m2 * p.l1 * p.l2 * t.cd * w2) +
       (p.m1 + p.m2) * p.l1 * p.g * (t.s3 - t.s1 * t.cd)) /
      den;

  const Eigen::Matrix2d b = manipulator_gain(p, x.q1, x.q2);

  ManipulatorState d;
  d.q1 = x.q1_dot;
  d.q1_dot = a2 + b(0, 0) * u[0] + b(0, 1) * u[1];
  d.q2 = x.q2_dot;
  d.q2_dot = a4 + b(1, 0) * u[0] + b(1, 1) * u[1];
  return d;
}

Eigen::Vector2d manipulator_sliding_vars(const ManipulatorState& x,
                                         const TargetPoint& target,
                                         double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::config, "sliding gain alpha must be > 0");
  }
  Eigen::Vector2d e(x.q1 - target.q_d[0], x.q2 - target.q_d[1]);
  Eigen::Vector2d e_dot(x.q1_dot - target.q_dot_d[0],
                        x.q2_dot - target.q_dot_d[1]);
  return e_dot + alpha * e;
}

void manipulator_sliding_dynamics(const ManipulatorState& x,
                                  const TargetPoint& target,
                                  const ManipulatorParams& params,
                                  double alpha, Eigen::Vector2d* f,
                                  Eigen::Matrix2d* G) {
  const ManipulatorState drift =
      manipulator_derivative(x, Eigen::Vector2d::Zero(), params);
  if (f != nullptr) {
    (*f)[0] = drift.q1_dot - target.q_ddot_d[0] +
              alpha * (x.q1_dot - target.q_dot_d[0]);
    (*f)[1] = drift.q2_dot - target.q_ddot_d[1] +
              alpha * (x.q2_dot - target.q_dot_d[1]);
  }
  if (G != nullptr) {
    *G = manipulator_gain(params, x.q1, x.q2);
  }
}

Eigen::Matrix2d manipulator_gain(const ManipulatorParams& p, double q1,
                                 double q2) {
  ManipulatorState x;
  x.q1 = q1;
  x.q2 = q2;
  const Trig t = trig(x);
  const double den = p.m2 * p.l1 * p.l1 * p.l2 * p.l2 *
                     inertia_denominator(p, t);
  Eigen::Matrix2d b;
  b(0, 0) = p.m2 * p.l2 * p.l2 / den;
  b(0, 1) = -p.m2 * p.l1 * p.l2 * t.cd / den;
  b(1, 0) = b(0, 1);
  b(1, 1) = (p.m1 + p.m2) * p.l1 * p.l1 / den;
  return b;
}

double manipulator_energy(const ManipulatorState& x,
                          const ManipulatorParams& p) {
  const double kinetic =
      0.5 * (p.m1 + p.m2) * p.l1 * p.l1 * x.q1_dot * x.q1_dot +
      0.5 * p.m2 * p.l2 * p.l2 * x.q2_dot * x.q2_dot +
      p.m2 * p.l1 * p.l2 * x.q1_dot * x.q2_dot * std::cos(x.q1 - x.q2);
  const double potential = (p.m1 + p.m2) * p.g * p.l1 * std::cos(x.q1) +
                           p.m2 * p.g * p.l2 * std::cos(x.q2);
  return kinetic + potential;
}

}  // namespace smc

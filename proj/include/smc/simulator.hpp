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

#ifndef SMC_SIMULATOR_HPP_
#define SMC_SIMULATOR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smc/controller.hpp"
#include "smc/plant.hpp"
#include "smc/types.hpp"

namespace smc {

enum class ControlHold {
  step,   // control computed once per step from the step-start state
  stage,  // control recomputed at every integration stage (convergence
          // studies; the benchmark scenarios use step)
};

struct SimSettings {
  double dt = 1e-3;       // step [s]
  double horizon = 10.0;  // [s]
  std::uint64_t seed = 0;
  std::optional<bool> smoothing_override;  // overrides the controller flag
  bool lyapunov_audit = true;
  double audit_boundary = 1e-2;  // |s|_inf band excluded from the audit
  ControlHold control_hold = ControlHold::step;

  void validate() const;
};

struct TrajectoryRow {
  double t = 0.0;
  Vector state;
  Vector s;
  Vector u;
  double V = 0.0;  // 1/2 s^T s
  int patterns_tried = 0;
  bool on_surface = false;
  // True when the realized uncertainties at this state respect the declared
  // bounds (|f_true - f0| <= f_bar and |M^{-1} dG Q^{-1}| <= F_bar); the
  // decrease guarantee only applies on such rows.
  bool bounds_respected = true;
};

struct Trajectory {
  std::vector<std::string> state_names;
  double dt = 0.0;
  std::vector<TrajectoryRow> rows;
};

/// Fixed-step 4th-order closed-loop integration of the true-parameter plant
/// with zero-order-hold control from the nominal sliding quantities.
/// Deterministic for fixed inputs. Solver or guard failures are rethrown
/// with the failing time and state attached.
Trajectory run_closed_loop(const Plant& plant, const ControllerConfig& cfg,
                           const SimSettings& sim);

/// CSV with header t,<state names>,s1..sm,u1..um,V,patterns_tried,on_surface
/// and shortest round-trip decimals. Written to a temporary file first and
/// atomically renamed into place.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);
std::string trajectory_csv(const Trajectory& traj);

struct TrackedSeries {
  std::string name;
  double band = 0.0;  // convergence band on |value|
  std::vector<double> values;
};

struct SeriesMetrics {
  bool converged = false;
  double convergence_time = 0.0;  // first entry into a permanent stay
  double overshoot = 0.0;         // worst excursion past zero, against the
                                  // initial sign
  double rms_tail = 0.0;          // rms over the tail window
};

struct Metrics {
  std::map<std::string, SeriesMetrics> variables;
  std::vector<double> max_abs_control;   // per control component
  std::vector<double> chattering_index;  // total variation per component
};

Metrics compute_metrics(const Trajectory& traj,
                        const std::vector<TrackedSeries>& tracked,
                        double tail_fraction = 0.25);

struct AuditOptions {
  double rho = 0.0;
  double boundary = 1e-2;
  // Tolerance constant c in tol = c * dt * (1 + max |s_dot|^2); the theorem
  // is continuous-time, so the discrete check carries an O(dt) allowance.
  double tolerance_constant = 2.0;
};

struct AuditViolation {
  int row = 0;
  double t = 0.0;
  double decrement = 0.0;  // (V(t+dt) - V(t)) / dt
  double threshold = 0.0;  // -2 rho V(t) + tol
};

struct AuditResult {
  std::vector<AuditViolation> violations;
  int audited_intervals = 0;
  bool empty_domain = false;  // trajectory never left the boundary band
  double tolerance = 0.0;     // the tol actually used
  double max_s_dot_norm = 0.0;
};

/// Checks the per-interval decrease (V(t+dt) - V(t))/dt <= -2 rho V(t) + tol
/// wherever |s|_inf exceeds the boundary and the row's realized
/// uncertainties respect the declared bounds.
AuditResult lyapunov_audit(const Trajectory& traj, const AuditOptions& opts);

/// Shortest round-trip decimal formatting used for all CSV output.
std::string format_double(double value);

}  // namespace smc

#endif  // SMC_SIMULATOR_HPP_

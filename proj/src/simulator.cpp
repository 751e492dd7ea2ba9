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

#include "smc/simulator.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace smc {

void SimSettings::validate() const {
  if (!(dt > 0.0)) throw Error(ErrorCode::config, "sim.dt must be > 0");
  if (dt > 1e-2) {
    throw Error(ErrorCode::config,
                "sim.dt must be <= 1e-2 for control-loop fidelity");
  }
  if (horizon < dt) {
    throw Error(ErrorCode::config, "sim.horizon must be >= sim.dt");
  }
  if (audit_boundary < 0.0) {
    throw Error(ErrorCode::config, "sim.audit_boundary must be >= 0");
  }
}

namespace {

// Uncertainty realization check for one row; tolerances are relative so that
// values sitting exactly on a declared bound still count as respected.
bool bounds_respected_at(const Plant& plant, const ControllerConfig& cfg,
                         double t, const Vector& x, const SlidingEval& nom) {
  Vector f_true;
  Matrix g_true;
  plant.true_sliding_dynamics(t, x, &f_true, &g_true);
  const Vector df = (f_true - nom.f0).cwiseAbs();
  for (int i = 0; i < df.size(); ++i) {
    if (df[i] > cfg.f_bar[i] + 1e-9 * (1.0 + cfg.f_bar[i])) return false;
  }
  const Matrix f_real = cfg.decomposition.M_inverse() *
                        (g_true - cfg.decomposition.G0()) *
                        cfg.decomposition.Q_inverse();
  const Matrix& f_bar = cfg.decomposition.F_bar();
  for (int r = 0; r < f_real.rows(); ++r) {
    for (int c = 0; c < f_real.cols(); ++c) {
      if (std::abs(f_real(r, c)) > f_bar(r, c) + 1e-9 * (1.0 + f_bar(r, c))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Trajectory run_closed_loop(const Plant& plant, const ControllerConfig& cfg,
                           const SimSettings& sim) {
  sim.validate();
  ControllerConfig active = cfg;
  if (sim.smoothing_override.has_value()) {
    active.smoothing = *sim.smoothing_override;
  }
  active.validate();
  if (!active.decomposition.admissible()) {
    throw Error(ErrorCode::not_admissible,
                "no induced norm of F_bar is below one");
  }

  const int steps = static_cast<int>(std::llround(sim.horizon / sim.dt));
  Trajectory traj;
  traj.state_names = plant.state_names();
  traj.dt = sim.dt;
  traj.rows.reserve(steps + 1);

  Vector x = plant.initial_state();

  auto control_at = [&](double t, const Vector& state) -> ControlOutput {
    const SlidingEval nom = plant.sliding(t, state);
    return compute_control(nom.f0, nom.s, active);
  };

  for (int k = 0; k <= steps; ++k) {
    const double t = k * sim.dt;
    try {
      plant.check_guards(x);
      const SlidingEval nom = plant.sliding(t, x);
      const ControlOutput ctrl = compute_control(nom.f0, nom.s, active);

      TrajectoryRow row;
      row.t = t;
      row.state = x;
      row.s = nom.s;
      row.u = ctrl.u;
      row.V = 0.5 * nom.s.squaredNorm();
      row.patterns_tried = ctrl.solver.patterns_tried;
      row.on_surface = ctrl.solver.on_surface;
      row.bounds_respected = bounds_respected_at(plant, active, t, x, nom);
      traj.rows.push_back(std::move(row));

      if (k == steps) break;

      const double h = sim.dt;
      if (sim.control_hold == ControlHold::step) {
        const Vector& u = ctrl.u;
        const Vector k1 = plant.derivative(t, x, u);
        const Vector k2 = plant.derivative(t + 0.5 * h, x + 0.5 * h * k1, u);
        const Vector k3 = plant.derivative(t + 0.5 * h, x + 0.5 * h * k2, u);
        const Vector k4 = plant.derivative(t + h, x + h * k3, u);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      } else {
        auto rhs = [&](double tau, const Vector& state) {
          return plant.derivative(tau, state, control_at(tau, state).u);
        };
        const Vector k1 = rhs(t, x);
        const Vector k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
        const Vector k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
        const Vector k4 = rhs(t + h, x + h * k3);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    } catch (const Error& e) {
      std::ostringstream snapshot;
      snapshot << e.what() << " [t=" << t << ", state=";
      for (int i = 0; i < x.size(); ++i) {
        snapshot << (i == 0 ? "" : " ") << x[i];
      }
      snapshot << "]";
      throw Error(e.code() == ErrorCode::guard ? ErrorCode::guard
                                               : e.code(),
                  snapshot.str());
    }
  }
  return traj;
}

std::string format_double(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t";
  for (const std::string& name : traj.state_names) out << "," << name;
  const int m = traj.rows.empty() ? 0 : static_cast<int>(traj.rows[0].s.size());
  for (int i = 1; i <= m; ++i) out << ",s" << i;
  for (int i = 1; i <= m; ++i) out << ",u" << i;
  out << ",V,patterns_tried,on_surface\n";
  for (const TrajectoryRow& row : traj.rows) {
    out << format_double(row.t);
    for (int i = 0; i < row.state.size(); ++i) {
      out << "," << format_double(row.state[i]);
    }
    for (int i = 0; i < row.s.size(); ++i) {
      out << "," << format_double(row.s[i]);
    }
    for (int i = 0; i < row.u.size(); ++i) {
      out << "," << format_double(row.u[i]);
    }
    out << "," << format_double(row.V) << "," << row.patterns_tried << ","
        << (row.on_surface ? 1 : 0) << "\n";
  }
  return out.str();
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::io, "cannot open " + tmp.string());
    }
    out << trajectory_csv(traj);
    if (!out) {
      throw Error(ErrorCode::io, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw Error(ErrorCode::io,
                "rename failed for " + target.string() + ": " + ec.message());
  }
}

Metrics compute_metrics(const Trajectory& traj,
                        const std::vector<TrackedSeries>& tracked,
                        double tail_fraction) {
  if (traj.rows.empty()) {
    throw Error(ErrorCode::invalid_argument, "empty trajectory");
  }
  const size_t n = traj.rows.size();
  Metrics metrics;

  for (const TrackedSeries& series : tracked) {
    if (series.values.size() != n) {
      throw Error(ErrorCode::invalid_argument,
                  "tracked series length mismatch: " + series.name);
    }
    SeriesMetrics sm;

    // Last index violating the band; convergence starts one sample later and
    // must persist to the end.
    std::ptrdiff_t last_violation = -1;
    for (size_t k = 0; k < n; ++k) {
      if (std::abs(series.values[k]) > series.band) {
        last_violation = static_cast<std::ptrdiff_t>(k);
      }
    }
    if (last_violation + 1 < static_cast<std::ptrdiff_t>(n)) {
      sm.converged = true;
      sm.convergence_time = traj.rows[last_violation + 1].t;
    }

    const double initial = series.values.front();
    const double initial_sign = initial >= 0.0 ? 1.0 : -1.0;
    for (size_t k = 0; k < n; ++k) {
      sm.overshoot =
          std::max(sm.overshoot, -initial_sign * series.values[k]);
    }
    sm.overshoot = std::max(sm.overshoot, 0.0);

    const size_t tail =
        std::max<size_t>(1, static_cast<size_t>(std::ceil(tail_fraction * n)));
    double acc = 0.0;
    for (size_t k = n - tail; k < n; ++k) {
      acc += series.values[k] * series.values[k];
    }
    sm.rms_tail = std::sqrt(acc / tail);

    metrics.variables[series.name] = sm;
  }

  const int m = static_cast<int>(traj.rows[0].u.size());
  metrics.max_abs_control.assign(m, 0.0);
  metrics.chattering_index.assign(m, 0.0);
  for (size_t k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) {
      metrics.max_abs_control[i] =
          std::max(metrics.max_abs_control[i], std::abs(traj.rows[k].u[i]));
      if (k > 0) {
        metrics.chattering_index[i] +=
            std::abs(traj.rows[k].u[i] - traj.rows[k - 1].u[i]);
      }
    }
  }
  return metrics;
}

AuditResult lyapunov_audit(const Trajectory& traj, const AuditOptions& opts) {
  if (traj.rows.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "trajectory too short to audit");
  }
  AuditResult result;
  const double dt = traj.dt;

  for (size_t k = 0; k + 1 < traj.rows.size(); ++k) {
    const Vector s_dot = (traj.rows[k + 1].s - traj.rows[k].s) / dt;
    result.max_s_dot_norm = std::max(result.max_s_dot_norm, s_dot.norm());
  }
  result.tolerance = opts.tolerance_constant * dt *
                     (1.0 + result.max_s_dot_norm * result.max_s_dot_norm);

  for (size_t k = 0; k + 1 < traj.rows.size(); ++k) {
    const TrajectoryRow& row = traj.rows[k];
    if (row.s.cwiseAbs().maxCoeff() <= opts.boundary) continue;
    if (!row.bounds_respected) continue;
    ++result.audited_intervals;
    const double decrement = (traj.rows[k + 1].V - row.V) / dt;
    const double threshold = -2.0 * opts.rho * row.V + result.tolerance;
    if (decrement > threshold) {
      result.violations.push_back(
          {static_cast<int>(k), row.t, decrement, threshold});
    }
  }
  result.empty_domain = result.audited_intervals == 0;
  return result;
}

}  // namespace smc

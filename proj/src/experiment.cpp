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

#include "smc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "smc/log.hpp"

namespace smc {

namespace {

constexpr double kDegree = M_PI / 180.0;

Json metrics_to_json(const Metrics& metrics) {
  Json vars = Json::object();
  for (const auto& [name, sm] : metrics.variables) {
    Json v;
    v["converged"] = sm.converged;
    if (sm.converged) v["convergence_time"] = sm.convergence_time;
    v["overshoot"] = sm.overshoot;
    v["rms_tail"] = sm.rms_tail;
    vars[name] = std::move(v);
  }
  Json out;
  out["variables"] = std::move(vars);
  out["max_abs_control"] = metrics.max_abs_control;
  out["chattering_index"] = metrics.chattering_index;
  return out;
}

Json admissibility_to_json(const AdmissibilityReport& report) {
  Json out;
  out["admissible"] = report.admissible;
  out["norm_one"] = report.norm_one;
  out["norm_two"] = report.norm_two;
  out["norm_infinity"] = report.norm_infinity;
  out["max_element"] = report.max_element;
  out["max_element_rule"] = report.max_element_rule;
  return out;
}

// The element-wise condition of the earlier adaptive scheme evaluates the
// bound of dG G0^{-1}, i.e. the decomposition M = I, Q = G0.
Matrix element_rule_ubm_for(const ExperimentConfig& cfg) {
  SamplingSettings sampling;
  sampling.seed = 2026;
  std::vector<Matrix> gains;
  if (cfg.plant.kind == PlantKind::spacecraft) {
    gains = spacecraft_gain_samples(cfg.plant.spacecraft_nominal, cfg.plant.k,
                                    sampling);
  } else {
    gains =
        manipulator_gain_samples(cfg.plant.ranges, cfg.plant.gravity, sampling);
  }
  const Matrix g0 = cfg.controller.decomposition.G0();
  const UncertaintySampleSet set =
      assemble_sample_set(gains, &g0, "element-rule comparison");
  const int m = static_cast<int>(g0.rows());
  return ubm_from_samples(Matrix::Identity(m, m), g0, set);
}

}  // namespace

std::vector<TrackedSeries> tracked_series(const ExperimentConfig& cfg,
                                          const Trajectory& traj) {
  std::vector<TrackedSeries> tracked;
  const size_t n = traj.rows.size();
  if (cfg.plant.kind == PlantKind::spacecraft) {
    TrackedSeries theta{"theta", 0.1 * kDegree, {}};
    TrackedSeries psi{"psi", 0.1 * kDegree, {}};
    TrackedSeries v_z{"v_z", 1.0, {}};
    theta.values.reserve(n);
    psi.values.reserve(n);
    v_z.values.reserve(n);
    for (const TrajectoryRow& row : traj.rows) {
      v_z.values.push_back(row.state[0]);
      theta.values.push_back(row.state[1]);
      psi.values.push_back(row.state[3]);
    }
    tracked.push_back(std::move(theta));
    tracked.push_back(std::move(psi));
    tracked.push_back(std::move(v_z));
  } else {
    TrackedSeries e1{"e1", 1e-3, {}};
    TrackedSeries e2{"e2", 1e-3, {}};
    e1.values.reserve(n);
    e2.values.reserve(n);
    for (const TrajectoryRow& row : traj.rows) {
      const TargetPoint target = target_trajectory(row.t);
      e1.values.push_back(row.state[0] - target.q_d[0]);
      e2.values.push_back(row.state[2] - target.q_d[1]);
    }
    tracked.push_back(std::move(e1));
    tracked.push_back(std::move(e2));
  }
  return tracked;
}

Json RunSummary::to_json() const {
  Json out;
  out["name"] = name;
  out["config_hash"] = config_hash;
  out["seed"] = seed;
  out["converged"] = converged;
  out["metrics"] = metrics_to_json(metrics);
  out["admissibility"] = admissibility_to_json(admissibility);
  out["element_rule"] = {
      {"ubm", matrix_to_json(element_rule_ubm)},
      {"max_element", element_rule_ubm.size() > 0
                          ? element_rule_ubm.maxCoeff()
                          : 0.0},
      {"satisfied", element_rule_satisfied},
  };
  out["audit"] = {
      {"enabled", audit_enabled},
      {"violations", audit_violations},
      {"intervals", audit_intervals},
      {"tolerance", audit_tolerance},
  };
  out["wall_seconds"] = wall_seconds;
  out["trajectory"] = trajectory_path;
  return out;
}

RunSummary run_experiment(const ExperimentConfig& cfg,
                          std::optional<std::uint64_t> seed_override,
                          const std::string& out_dir_override) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = seed_override.value_or(cfg.sim.seed);

  SimSettings sim = cfg.sim;
  sim.seed = seed;
  const std::unique_ptr<Plant> plant = cfg.make_plant(seed);

  logging::info("running experiment " + cfg.name + " (seed " +
                std::to_string(seed) + ")");
  const Trajectory traj = run_closed_loop(*plant, cfg.controller, sim);

  RunSummary summary;
  summary.name = cfg.name;
  summary.seed = seed;
  {
    Json hashable;
    hashable["name"] = cfg.name;
    hashable["dt"] = cfg.sim.dt;
    hashable["horizon"] = cfg.sim.horizon;
    hashable["rho"] = cfg.controller.rho;
    hashable["F_bar"] = matrix_to_json(cfg.controller.decomposition.F_bar());
    summary.config_hash = config_hash(hashable);
  }

  const std::vector<TrackedSeries> tracked = tracked_series(cfg, traj);
  summary.metrics = compute_metrics(traj, tracked);
  summary.converged = true;
  for (const auto& [name, sm] : summary.metrics.variables) {
    summary.converged = summary.converged && sm.converged;
  }

  summary.admissibility =
      check_admissibility(cfg.controller.decomposition.F_bar());
  summary.element_rule_ubm = element_rule_ubm_for(cfg);
  const int m = cfg.controller.dim();
  summary.element_rule_satisfied =
      summary.element_rule_ubm.maxCoeff() < 1.0 / m;

  summary.audit_enabled = sim.lyapunov_audit;
  if (sim.lyapunov_audit) {
    AuditOptions opts;
    opts.rho = cfg.controller.rho;
    opts.boundary = sim.audit_boundary;
    const AuditResult audit = lyapunov_audit(traj, opts);
    summary.audit_violations = static_cast<int>(audit.violations.size());
    summary.audit_intervals = audit.audited_intervals;
    summary.audit_tolerance = audit.tolerance;
  }

  const std::string out_dir =
      out_dir_override.empty() ? cfg.output_dir : out_dir_override;
  std::filesystem::create_directories(out_dir);
  summary.trajectory_path = out_dir + "/trajectory.csv";
  write_trajectory_csv(traj, summary.trajectory_path);

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_json_file(summary.to_json(), out_dir + "/summary.json");
  return summary;
}

Json DecompositionReport::to_json() const {
  Json out;
  out["name"] = name;
  out["config_hash"] = config_hash;
  out["seed"] = seed;
  out["certifiable"] = certifiable;
  out["M"] = matrix_to_json(decomposition.M());
  out["Q"] = matrix_to_json(decomposition.Q());
  out["F_bar"] = matrix_to_json(decomposition.F_bar());
  out["norms"] = {
      {"one", decomposition.norm(NormKind::one)},
      {"two", decomposition.norm(NormKind::two)},
      {"infinity", decomposition.norm(NormKind::infinity)},
  };
  out["fitness"] = fitness;
  out["fitness_trace"] = fitness_trace;
  out["evaluations"] = evaluations;
  out["sample_count"] = sample_count;
  out["provenance"] = provenance;
  out["wall_seconds"] = wall_seconds;
  return out;
}

DecompositionReport run_decomposition(const DecomposeConfig& cfg,
                                      std::optional<std::uint64_t>
                                          seed_override,
                                      const std::string& out_dir_override) {
  const auto start = std::chrono::steady_clock::now();

  PsoSettings pso = cfg.pso;
  if (seed_override.has_value()) pso.seed = *seed_override;

  const std::vector<Matrix> gains = cfg.gain_samples();
  std::string provenance;
  if (cfg.plant.kind == PlantKind::spacecraft) {
    provenance = "spacecraft box at k=" + std::to_string(cfg.plant.k);
  } else {
    provenance = "manipulator ranges";
  }
  provenance += ": 2^r corners + " +
                std::to_string(cfg.sampling.interior_draws) +
                " interior draws x state grid (sampling proxy; the "
                "continuous box is not exhaustively certified)";
  const UncertaintySampleSet set =
      assemble_sample_set(gains, nullptr, provenance);

  logging::info("decomposition search over " +
                std::to_string(set.deltas.size()) + " samples");
  const DecompositionSearchResult search = pso_search(set, pso);

  DecompositionReport report;
  report.name = cfg.name;
  report.seed = pso.seed;
  report.decomposition = search.decomposition;
  report.fitness = search.fitness;
  report.fitness_trace = search.fitness_trace;
  report.evaluations = search.evaluations;
  report.sample_count = static_cast<int>(set.deltas.size());
  report.provenance = set.provenance;
  report.certifiable = report.fitness < 1.0;
  {
    Json hashable;
    hashable["name"] = cfg.name;
    hashable["swarm"] = pso.swarm_size;
    hashable["iterations"] = pso.iterations;
    hashable["samples"] = report.sample_count;
    report.config_hash = config_hash(hashable);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const std::string out_dir =
      out_dir_override.empty() ? cfg.output_dir : out_dir_override;
  std::filesystem::create_directories(out_dir);
  write_json_file(report.to_json(), out_dir + "/decomposition.json");
  return report;
}

void write_json_file(const Json& j, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io, "cannot open " + tmp.string());
    out << j.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw Error(ErrorCode::io,
                "rename failed for " + target.string() + ": " + ec.message());
  }
}

}  // namespace smc

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

#ifndef SMC_EXPERIMENT_HPP_
#define SMC_EXPERIMENT_HPP_

#include <optional>
#include <string>

#include "smc/config.hpp"
#include "smc/decomposition.hpp"
#include "smc/simulator.hpp"

namespace smc {

struct RunSummary {
  std::string name;
  std::string config_hash;
  std::uint64_t seed = 0;
  bool converged = false;
  Metrics metrics;
  AdmissibilityReport admissibility;
  // The element-wise prior-rule bound (decomposition M = I, Q = G0) computed
  // from the plant's uncertainty box, for comparison with the norm condition.
  Matrix element_rule_ubm;
  bool element_rule_satisfied = false;
  int audit_violations = 0;
  int audit_intervals = 0;
  double audit_tolerance = 0.0;
  bool audit_enabled = false;
  double wall_seconds = 0.0;
  std::string trajectory_path;

  Json to_json() const;
};

/// Default convergence bands per plant kind; also used by the acceptance
/// criteria. Spacecraft: theta and psi within 0.1 degree, v_z within 1 m/s.
/// Manipulator: both tracking errors within 1e-3 rad.
std::vector<TrackedSeries> tracked_series(const ExperimentConfig& cfg,
                                          const Trajectory& traj);

/// Runs one closed-loop experiment: samples true parameters, integrates,
/// computes metrics, audits, and writes trajectory.csv plus summary.json
/// into the output directory (write-then-rename).
RunSummary run_experiment(const ExperimentConfig& cfg,
                          std::optional<std::uint64_t> seed_override,
                          const std::string& out_dir_override);

struct DecompositionReport {
  std::string name;
  std::string config_hash;
  std::uint64_t seed = 0;
  bool certifiable = false;  // two-norm of the found bound below one
  GainDecomposition decomposition;
  double fitness = 0.0;
  std::vector<double> fitness_trace;
  int evaluations = 0;
  int sample_count = 0;
  std::string provenance;
  double wall_seconds = 0.0;

  Json to_json() const;
};

/// Builds the uncertainty sample set for the configured plant, runs the
/// decomposition search, and writes decomposition.json into the output
/// directory.
DecompositionReport run_decomposition(const DecomposeConfig& cfg,
                                      std::optional<std::uint64_t>
                                          seed_override,
                                      const std::string& out_dir_override);

/// Serializes JSON to a file via a temporary and an atomic rename.
void write_json_file(const Json& j, const std::string& path);

}  // namespace smc

#endif  // SMC_EXPERIMENT_HPP_

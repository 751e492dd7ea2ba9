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

#ifndef SMC_CONFIG_HPP_
#define SMC_CONFIG_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "smc/controller.hpp"
#include "smc/plant.hpp"
#include "smc/sampling.hpp"
#include "smc/simulator.hpp"

namespace smc {

using Json = nlohmann::json;

enum class PlantKind { spacecraft, manipulator };

struct PlantConfig {
  PlantKind kind = PlantKind::spacecraft;

  // spacecraft
  SpacecraftParams spacecraft_nominal;
  double k = 1.0;
  SpacecraftState spacecraft_initial;
  AxialVelocityMode v_x_mode = AxialVelocityMode::thrust;

  // manipulator
  ManipulatorRanges ranges;
  double gravity = 9.81;
  ManipulatorParams manipulator_true;  // the evaluated case
  ManipulatorState manipulator_initial;
};

struct SlidingConfig {
  double lambda1 = 0.0;  // spacecraft
  double lambda2 = 0.0;
  double alpha = 0.0;  // manipulator
};

struct ExperimentConfig {
  std::string name;
  PlantConfig plant;
  SlidingConfig sliding;
  ControllerConfig controller;
  SimSettings sim;
  std::string output_dir;

  /// Parses and validates; error messages name the offending field.
  static ExperimentConfig from_json(const Json& j);
  static ExperimentConfig from_string(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);

  /// Instantiates the plant with true parameters (spacecraft parameters are
  /// sampled from the uncertainty box with the given seed; the manipulator
  /// uses the configured case values).
  std::unique_ptr<Plant> make_plant(std::uint64_t seed) const;
};

struct DecomposeConfig {
  std::string name;
  PlantConfig plant;
  PsoSettings pso;
  SamplingSettings sampling;
  std::string output_dir;

  static DecomposeConfig from_json(const Json& j);
  static DecomposeConfig from_string(const std::string& text);
  static DecomposeConfig from_file(const std::string& path);

  std::vector<Matrix> gain_samples() const;
};

/// FNV-1a hash of the canonical dump, as fixed-width hex.
std::string config_hash(const Json& j);

/// Parses text as JSON; wraps parse failures as config errors.
Json parse_json_text(const std::string& text, const std::string& origin);

Matrix matrix_from_json(const Json& j, const std::string& path);
Json matrix_to_json(const Matrix& m);

/// Shared helper: parse a controller block {rho, f_bar, eta_bar, M, Q,
/// F_bar, smoothing, delta_s, delta_v}.
ControllerConfig controller_from_json(const Json& j, const std::string& path);

}  // namespace smc

#endif  // SMC_CONFIG_HPP_

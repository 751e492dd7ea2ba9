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

#include "smc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace smc {

namespace {

constexpr double kDegree = M_PI / 180.0;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::config, "config error at " + path + ": " + what);
}

const Json& require(const Json& obj, const std::string& path,
                    const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

double require_number(const Json& obj, const std::string& path,
                      const std::string& key) {
  const Json& v = require(obj, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path + "." + key, "must be finite");
  return x;
}

double optional_number(const Json& obj, const std::string& path,
                       const std::string& key, double fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return require_number(obj, path, key);
}

bool optional_bool(const Json& obj, const std::string& path,
                   const std::string& key, bool fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::string require_string(const Json& obj, const std::string& path,
                           const std::string& key) {
  const Json& v = require(obj, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Vector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  Vector out(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(path, "expected numbers");
    out[static_cast<int>(i)] = j[i].get<double>();
  }
  if (!out.allFinite()) fail(path, "entries must be finite");
  return out;
}

}  // namespace

Matrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    fail(path, "expected a non-empty array of rows");
  }
  const size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(path, "rows must be arrays");
  const size_t cols = j[0].size();
  Matrix out(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(path, "rows must share one length");
    }
    for (size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) fail(path, "expected numbers");
      out(static_cast<int>(r), static_cast<int>(c)) = j[r][c].get<double>();
    }
  }
  if (!out.allFinite()) fail(path, "entries must be finite");
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ControllerConfig controller_from_json(const Json& j, const std::string& path) {
  ControllerConfig cfg;
  cfg.rho = require_number(j, path, "rho");
  cfg.f_bar = vector_from_json(require(j, path, "f_bar"), path + ".f_bar");
  if (j.contains("eta_bar")) {
    cfg.eta_bar =
        vector_from_json(require(j, path, "eta_bar"), path + ".eta_bar");
  } else {
    cfg.eta_bar = Vector::Zero(cfg.f_bar.size());
  }
  const Matrix m = matrix_from_json(require(j, path, "M"), path + ".M");
  const Matrix q = matrix_from_json(require(j, path, "Q"), path + ".Q");
  const Matrix f_bar =
      matrix_from_json(require(j, path, "F_bar"), path + ".F_bar");
  try {
    cfg.decomposition = GainDecomposition::make(m, q, f_bar);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  cfg.smoothing = optional_bool(j, path, "smoothing", false);
  cfg.delta_s = optional_number(j, path, "delta_s", 1e-3);
  cfg.delta_v = optional_number(j, path, "delta_v", 1e-3);
  try {
    cfg.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  if (!(cfg.rho > 0.0)) fail(path + ".rho", "must be > 0");
  return cfg;
}

namespace {

PlantConfig plant_from_json(const Json& j, const std::string& path) {
  PlantConfig plant;
  const std::string kind = require_string(j, path, "kind");
  if (kind == "spacecraft") {
    plant.kind = PlantKind::spacecraft;
    const Json& nom = require(j, path, "nominal");
    const std::string npath = path + ".nominal";
    SpacecraftParams p;
    p.m = require_number(nom, npath, "m");
    p.m_f = require_number(nom, npath, "m_f");
    p.I = require_number(nom, npath, "I");
    p.I_f = require_number(nom, npath, "I_f");
    p.a = require_number(nom, npath, "a");
    p.b = require_number(nom, npath, "b");
    p.F_thrust = require_number(nom, npath, "F_thrust");
    p.epsilon = require_number(nom, npath, "epsilon");
    const Json& bounds = require(j, path, "bounds");
    const std::string bpath = path + ".bounds";
    p.bounds.m = require_number(bounds, bpath, "m");
    p.bounds.m_f = require_number(bounds, bpath, "m_f");
    p.bounds.I_f = require_number(bounds, bpath, "I_f");
    p.bounds.a = require_number(bounds, bpath, "a");
    p.bounds.epsilon = require_number(bounds, bpath, "epsilon");
    plant.k = require_number(j, path, "k");
    try {
      p.validate(plant.k);
    } catch (const Error& e) {
      fail(path, e.what());
    }
    plant.spacecraft_nominal = p;

    const Json& init = require(j, path, "initial");
    const std::string ipath = path + ".initial";
    SpacecraftState x;
    x.v_z = require_number(init, ipath, "v_z");
    x.theta = require_number(init, ipath, "theta_deg") * kDegree;
    x.theta_dot = require_number(init, ipath, "theta_dot_deg") * kDegree;
    x.psi = require_number(init, ipath, "psi_deg") * kDegree;
    x.psi_dot = require_number(init, ipath, "psi_dot_deg") * kDegree;
    x.v_x = require_number(init, ipath, "v_x");
    plant.spacecraft_initial = x;

    const std::string mode =
        j.contains("v_x_mode") ? require_string(j, path, "v_x_mode")
                               : std::string("thrust");
    if (mode == "thrust") {
      plant.v_x_mode = AxialVelocityMode::thrust;
    } else if (mode == "constant") {
      plant.v_x_mode = AxialVelocityMode::constant;
    } else {
      fail(path + ".v_x_mode", "expected \"thrust\" or \"constant\"");
    }
  } else if (kind == "manipulator") {
    plant.kind = PlantKind::manipulator;
    const Json& ranges = require(j, path, "ranges");
    const std::string rpath = path + ".ranges";
    auto range = [&](const char* key, double& lo, double& hi) {
      const Json& v = require(ranges, rpath, key);
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
          !v[1].is_number()) {
        fail(rpath + "." + key, "expected [lo, hi]");
      }
      lo = v[0].get<double>();
      hi = v[1].get<double>();
      if (!(lo > 0.0) || hi < lo) fail(rpath + "." + key, "need 0 < lo <= hi");
    };
    range("m1", plant.ranges.m1_lo, plant.ranges.m1_hi);
    range("m2", plant.ranges.m2_lo, plant.ranges.m2_hi);
    range("l1", plant.ranges.l1_lo, plant.ranges.l1_hi);
    range("l2", plant.ranges.l2_lo, plant.ranges.l2_hi);
    plant.gravity = optional_number(j, path, "g", 9.81);
    if (plant.gravity < 0.0) fail(path + ".g", "must be >= 0");

    const Json& true_params = require(j, path, "true_params");
    const std::string tpath = path + ".true_params";
    plant.manipulator_true.m1 = require_number(true_params, tpath, "m1");
    plant.manipulator_true.m2 = require_number(true_params, tpath, "m2");
    plant.manipulator_true.l1 = require_number(true_params, tpath, "l1");
    plant.manipulator_true.l2 = require_number(true_params, tpath, "l2");
    plant.manipulator_true.g = plant.gravity;
    try {
      plant.manipulator_true.validate();
    } catch (const Error& e) {
      fail(tpath, e.what());
    }
    if (!plant.ranges.contains(plant.manipulator_true)) {
      fail(tpath, "true parameters must lie inside the declared ranges");
    }

    ManipulatorState x;
    if (j.contains("initial")) {
      const Json& init = j.at("initial");
      const std::string ipath = path + ".initial";
      x.q1 = optional_number(init, ipath, "q1", 0.0);
      x.q1_dot = optional_number(init, ipath, "q1_dot", 0.0);
      x.q2 = optional_number(init, ipath, "q2", 0.0);
      x.q2_dot = optional_number(init, ipath, "q2_dot", 0.0);
    }
    plant.manipulator_initial = x;
  } else {
    fail(path + ".kind", "expected \"spacecraft\" or \"manipulator\"");
  }
  return plant;
}

SimSettings sim_from_json(const Json& j, const std::string& path) {
  SimSettings sim;
  sim.dt = require_number(j, path, "dt");
  sim.horizon = require_number(j, path, "horizon");
  sim.seed = static_cast<std::uint64_t>(
      optional_number(j, path, "seed", 0.0));
  sim.lyapunov_audit = optional_bool(j, path, "lyapunov_audit", true);
  sim.audit_boundary = optional_number(j, path, "audit_boundary", 1e-2);
  if (j.contains("smoothing")) {
    sim.smoothing_override = optional_bool(j, path, "smoothing", false);
  }
  if (j.contains("control_hold")) {
    const std::string hold = require_string(j, path, "control_hold");
    if (hold == "step") {
      sim.control_hold = ControlHold::step;
    } else if (hold == "stage") {
      sim.control_hold = ControlHold::stage;
    } else {
      fail(path + ".control_hold", "expected \"step\" or \"stage\"");
    }
  }
  try {
    sim.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return sim;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig cfg;
  if (!j.is_object()) fail("config", "expected a JSON object");
  cfg.name = j.contains("name") ? require_string(j, "config", "name")
                                : std::string("experiment");
  cfg.plant = plant_from_json(require(j, "config", "plant"), "plant");

  const Json& sliding = require(j, "config", "sliding");
  if (cfg.plant.kind == PlantKind::spacecraft) {
    cfg.sliding.lambda1 = require_number(sliding, "sliding", "lambda1");
    cfg.sliding.lambda2 = require_number(sliding, "sliding", "lambda2");
    if (!(cfg.sliding.lambda1 > 0.0 && cfg.sliding.lambda2 > 0.0)) {
      fail("sliding", "lambda1 and lambda2 must be > 0");
    }
  } else {
    cfg.sliding.alpha = require_number(sliding, "sliding", "alpha");
    if (!(cfg.sliding.alpha > 0.0)) fail("sliding.alpha", "must be > 0");
  }

  cfg.controller =
      controller_from_json(require(j, "config", "controller"), "controller");
  cfg.sim = sim_from_json(require(j, "config", "sim"), "sim");
  cfg.output_dir = j.contains("output")
                       ? require_string(j, "config", "output")
                       : std::string("out/") + cfg.name;
  return cfg;
}

ExperimentConfig ExperimentConfig::from_string(const std::string& text) {
  return from_json(parse_json_text(text, "config"));
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::config, "cannot open config file " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

std::unique_ptr<Plant> ExperimentConfig::make_plant(
    std::uint64_t seed) const {
  if (plant.kind == PlantKind::spacecraft) {
    const SpacecraftParams true_params =
        sample_spacecraft_params(plant.spacecraft_nominal, plant.k, seed);
    return std::make_unique<SpacecraftPlant>(
        plant.spacecraft_nominal, true_params, plant.spacecraft_initial,
        sliding.lambda1, sliding.lambda2, plant.v_x_mode);
  }
  return std::make_unique<ManipulatorPlant>(
      plant.ranges.midpoint(plant.gravity), plant.manipulator_true,
      plant.manipulator_initial, sliding.alpha);
}

DecomposeConfig DecomposeConfig::from_json(const Json& j) {
  DecomposeConfig cfg;
  if (!j.is_object()) fail("config", "expected a JSON object");
  cfg.name = j.contains("name") ? require_string(j, "config", "name")
                                : std::string("decomposition");
  cfg.plant = plant_from_json(require(j, "config", "plant"), "plant");

  if (j.contains("pso")) {
    const Json& pso = j.at("pso");
    cfg.pso.swarm_size = static_cast<int>(
        optional_number(pso, "pso", "swarm_size", cfg.pso.swarm_size));
    cfg.pso.iterations = static_cast<int>(
        optional_number(pso, "pso", "iterations", cfg.pso.iterations));
    cfg.pso.inertia = optional_number(pso, "pso", "inertia", cfg.pso.inertia);
    cfg.pso.cognitive =
        optional_number(pso, "pso", "cognitive", cfg.pso.cognitive);
    cfg.pso.social = optional_number(pso, "pso", "social", cfg.pso.social);
    cfg.pso.bound = optional_number(pso, "pso", "bound", cfg.pso.bound);
    cfg.pso.seed = static_cast<std::uint64_t>(
        optional_number(pso, "pso", "seed", 0.0));
  }
  try {
    cfg.pso.validate();
  } catch (const Error& e) {
    fail("pso", e.what());
  }

  if (j.contains("sampling")) {
    const Json& sampling = j.at("sampling");
    cfg.sampling.interior_draws = static_cast<int>(optional_number(
        sampling, "sampling", "interior_draws", cfg.sampling.interior_draws));
    cfg.sampling.seed = static_cast<std::uint64_t>(
        optional_number(sampling, "sampling", "seed", 0.0));
    if (sampling.contains("psi_grid_deg")) {
      const Vector grid = vector_from_json(sampling.at("psi_grid_deg"),
                                           "sampling.psi_grid_deg");
      cfg.sampling.psi_grid.assign(grid.data(), grid.data() + grid.size());
      for (double& v : cfg.sampling.psi_grid) v *= kDegree;
    }
    if (sampling.contains("separation_grid")) {
      const Vector grid = vector_from_json(sampling.at("separation_grid"),
                                           "sampling.separation_grid");
      cfg.sampling.separation_grid.assign(grid.data(),
                                          grid.data() + grid.size());
    }
  }
  try {
    cfg.sampling.validate();
  } catch (const Error& e) {
    fail("sampling", e.what());
  }

  cfg.output_dir = j.contains("output")
                       ? require_string(j, "config", "output")
                       : std::string("out/") + cfg.name;
  return cfg;
}

DecomposeConfig DecomposeConfig::from_string(const std::string& text) {
  return from_json(parse_json_text(text, "config"));
}

DecomposeConfig DecomposeConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::config, "cannot open config file " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

std::vector<Matrix> DecomposeConfig::gain_samples() const {

  if (plant.kind == PlantKind::spacecraft) {
    return spacecraft_gain_samples(plant.spacecraft_nominal, plant.k,
                                   sampling);
  }
  return manipulator_gain_samples(plant.ranges, plant.gravity, sampling);
}

std::string config_hash(const Json& j) {
  const std::string text = j.dump();
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::config, origin + ": invalid JSON");
  }
  return j;
}

}  // namespace smc

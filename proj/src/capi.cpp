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

#include "smc/smc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "smc/certify.hpp"
#include "smc/config.hpp"
#include "smc/controller.hpp"
#include "smc/experiment.hpp"

namespace {

thread_local std::string g_last_error;

smc_status status_of(smc::ErrorCode code) {
  using smc::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SMC_ERR_INVALID_ARGUMENT;
    case ErrorCode::config: return SMC_ERR_CONFIG;
    case ErrorCode::no_solution: return SMC_ERR_NO_SOLUTION;
    case ErrorCode::singular: return SMC_ERR_SINGULAR;
    case ErrorCode::not_admissible: return SMC_ERR_NOT_ADMISSIBLE;
    case ErrorCode::guard: return SMC_ERR_GUARD;
    case ErrorCode::not_certifiable: return SMC_ERR_NOT_CERTIFIABLE;
    case ErrorCode::property_failed: return SMC_ERR_PROPERTY_FAILED;
    case ErrorCode::io: return SMC_ERR_IO;
    case ErrorCode::internal: return SMC_ERR_INTERNAL;
  }
  return SMC_ERR_INTERNAL;
}

template <typename Fn>
smc_status wrap(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const smc::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SMC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SMC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SMC_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

smc_status require_args(bool ok) {
  if (!ok) {
    g_last_error = "null or malformed argument";
    return SMC_ERR_INVALID_ARGUMENT;
  }
  return SMC_OK;
}

}  // namespace

struct smc_controller {
  smc::ControllerConfig cfg;
};

extern "C" {

const char* smc_status_name(smc_status status) {
  switch (status) {
    case SMC_OK: return "ok";
    case SMC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SMC_ERR_CONFIG: return "config";
    case SMC_ERR_NO_SOLUTION: return "no_solution";
    case SMC_ERR_SINGULAR: return "singular";
    case SMC_ERR_NOT_ADMISSIBLE: return "not_admissible";
    case SMC_ERR_GUARD: return "guard";
    case SMC_ERR_NOT_CERTIFIABLE: return "not_certifiable";
    case SMC_ERR_PROPERTY_FAILED: return "property_failed";
    case SMC_ERR_IO: return "io";
    case SMC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* smc_last_error(void) { return g_last_error.c_str(); }

const char* smc_version(void) { return "1.0.0"; }

smc_status smc_induced_norm(int rows, int cols, const double* a, int kind,
                            double* out) {
  if (smc_status s = require_args(a != nullptr && out != nullptr &&
                                  rows > 0 && cols > 0);
      s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    smc::NormKind norm_kind;
    switch (kind) {
      case SMC_NORM_ONE: norm_kind = smc::NormKind::one; break;
      case SMC_NORM_TWO: norm_kind = smc::NormKind::two; break;
      case SMC_NORM_INFINITY: norm_kind = smc::NormKind::infinity; break;
      default:
        throw smc::Error(smc::ErrorCode::invalid_argument,
                         "unknown norm kind");
    }
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        mapped(a, rows, cols);
    *out = smc::induced_norm(smc::Matrix(mapped), norm_kind);
    return SMC_OK;
  });
}

smc_status smc_solve(int m, const double* h, const double* u_c, double* u_hat,
                     smc_solve_info* info) {
  if (smc_status s = require_args(h != nullptr && u_c != nullptr &&
                                  u_hat != nullptr && m > 0);
      s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        h_map(h, m, m);
    const Eigen::Map<const smc::Vector> u_c_map(u_c, m);
    const smc::SolveResult result = smc::solve_control_equation(
        {smc::Matrix(h_map), smc::Vector(u_c_map)});
    Eigen::Map<smc::Vector>(u_hat, m) = result.u_hat;
    if (info != nullptr) {
      info->patterns_tried = result.patterns_tried;
      info->on_surface = result.on_surface ? 1 : 0;
      info->residual = result.residual;
    }
    return SMC_OK;
  });
}

smc_status smc_check_admissibility(int m, const double* f_bar,
                                   smc_admissibility* out) {
  if (smc_status s =
          require_args(f_bar != nullptr && out != nullptr && m > 0);
      s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        mapped(f_bar, m, m);
    const smc::AdmissibilityReport report =
        smc::check_admissibility(smc::Matrix(mapped));
    out->admissible = report.admissible ? 1 : 0;
    out->max_element_rule = report.max_element_rule ? 1 : 0;
    out->norm_one = report.norm_one;
    out->norm_two = report.norm_two;
    out->norm_infinity = report.norm_infinity;
    out->max_element = report.max_element;
    return SMC_OK;
  });
}

smc_status smc_controller_create_json(const char* controller_json,
                                      smc_controller** out) {
  if (smc_status s =
          require_args(controller_json != nullptr && out != nullptr);
      s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    const smc::Json j =
        smc::parse_json_text(controller_json, "controller");
    auto handle = std::make_unique<smc_controller>();
    handle->cfg = smc::controller_from_json(j, "controller");
    *out = handle.release();
    return SMC_OK;
  });
}

void smc_controller_destroy(smc_controller* controller) { delete controller; }

int smc_controller_dim(const smc_controller* controller) {
  return controller == nullptr ? 0 : controller->cfg.dim();
}

smc_status smc_controller_compute(const smc_controller* controller,
                                  const double* f0, const double* s, double* u,
                                  smc_solve_info* info) {
  if (smc_status st = require_args(controller != nullptr && f0 != nullptr &&
                                   s != nullptr && u != nullptr);
      st != SMC_OK) {
    return st;
  }
  return wrap([&]() {
    const int m = controller->cfg.dim();
    const Eigen::Map<const smc::Vector> f0_map(f0, m);
    const Eigen::Map<const smc::Vector> s_map(s, m);
    const smc::ControlOutput out = smc::compute_control(
        smc::Vector(f0_map), smc::Vector(s_map), controller->cfg);
    Eigen::Map<smc::Vector>(u, m) = out.u;
    if (info != nullptr) {
      info->patterns_tried = out.solver.patterns_tried;
      info->on_surface = out.solver.on_surface ? 1 : 0;
      info->residual = out.solver.residual;
    }
    return SMC_OK;
  });
}

smc_status smc_run_simulation(const char* config_json, const char* out_dir,
                              int64_t seed_override, char** summary_json) {
  if (smc_status s = require_args(config_json != nullptr); s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    const smc::ExperimentConfig cfg =
        smc::ExperimentConfig::from_string(config_json);
    std::optional<std::uint64_t> seed;
    if (seed_override >= 0) {
      seed = static_cast<std::uint64_t>(seed_override);
    }
    const std::string out =
        out_dir == nullptr ? std::string() : std::string(out_dir);
    const smc::RunSummary summary = smc::run_experiment(cfg, seed, out);
    if (summary_json != nullptr) {
      *summary_json = copy_string(summary.to_json().dump(2));
    }
    return SMC_OK;
  });
}

smc_status smc_run_certification(const char* suite, uint64_t seed, int trials,
                                 int inject_inadmissible,
                                 char** report_json) {
  if (smc_status s = require_args(suite != nullptr); s != SMC_OK) return s;
  return wrap([&]() {
    smc::CertifyOptions options;
    options.suite = suite;
    options.seed = seed;
    options.trials = trials;
    options.inject_inadmissible = inject_inadmissible != 0;
    const smc::CertifyReport report = smc::run_certify(options);
    if (report_json != nullptr) {
      *report_json = copy_string(report.to_json().dump(2));
    }
    if (!report.passed()) {
      g_last_error = "certification suite recorded failures";
      return SMC_ERR_PROPERTY_FAILED;
    }
    return SMC_OK;
  });
}

smc_status smc_run_decomposition(const char* config_json, const char* out_dir,
                                 int64_t seed_override, char** report_json) {
  if (smc_status s = require_args(config_json != nullptr); s != SMC_OK) {
    return s;
  }
  return wrap([&]() {
    const smc::DecomposeConfig cfg =
        smc::DecomposeConfig::from_string(config_json);
    std::optional<std::uint64_t> seed;
    if (seed_override >= 0) {
      seed = static_cast<std::uint64_t>(seed_override);
    }
    const std::string out =
        out_dir == nullptr ? std::string() : std::string(out_dir);
    const smc::DecompositionReport report =
        smc::run_decomposition(cfg, seed, out);
    if (report_json != nullptr) {
      *report_json = copy_string(report.to_json().dump(2));
    }
    if (!report.certifiable) {
      g_last_error = "best bound matrix has two-norm >= 1";
      return SMC_ERR_NOT_CERTIFIABLE;
    }
    return SMC_OK;
  });
}

void smc_string_free(char* text) { std::free(text); }

}  // extern "C"

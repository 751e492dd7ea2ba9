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

// Command-line front end; all real work happens behind the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "smc/smc.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitNotCertifiable = 4;

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

void report_failure(smc_status status) {
  std::cerr << "error (" << smc_status_name(status) << "): "
            << smc_last_error() << "\n";
}

int exit_code_for(smc_status status, bool decompose) {
  switch (status) {
    case SMC_OK:
      return 0;
    case SMC_ERR_CONFIG:
    case SMC_ERR_INVALID_ARGUMENT:
      return kExitValidation;
    case SMC_ERR_NOT_CERTIFIABLE:
      return decompose ? kExitNotCertifiable : kExitRuntime;
    case SMC_ERR_PROPERTY_FAILED:
      return 1;
    default:
      return kExitRuntime;
  }
}

void print_report(const char* report) {
  if (report != nullptr) std::cout << report << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-mode control toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string suite;
  std::int64_t seed = -1;
  int trials = 1000;
  bool inject_inadmissible = false;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a closed-loop experiment");
  simulate->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  simulate->add_option("--seed", seed, "Override the config seed");
  simulate->add_option("--out", out_dir, "Output directory override");

  CLI::App* certify =
      app.add_subcommand("certify", "Run a certification suite");
  certify
      ->add_option("--suite", suite,
                   "cones | uniqueness | theorem3 | lyapunov")
      ->required();
  certify->add_option("--seed", seed, "Suite seed (default 1)");
  certify->add_option("--trials", trials, "Trial count (default 1000)");
  certify->add_flag("--inject-inadmissible", inject_inadmissible,
                    "Negative control: feed inadmissible instances");
  certify->add_option("--out", out_dir, "Directory for report.json");

  CLI::App* decompose =
      app.add_subcommand("decompose", "Search a gain decomposition");
  decompose->add_option("--config", config_path, "Decompose config (JSON)")
      ->required();
  decompose->add_option("--seed", seed, "Override the PSO seed");
  decompose->add_option("--out", out_dir, "Output directory override");

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    std::string config_text;
    if (!read_file(config_path, &config_text)) {
      std::cerr << "error (config): cannot read " << config_path << "\n";
      return kExitValidation;
    }
    char* summary = nullptr;
    const smc_status status = smc_run_simulation(
        config_text.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
        seed, &summary);
    if (status == SMC_OK) {
      print_report(summary);
    } else {
      report_failure(status);
    }
    smc_string_free(summary);
    return exit_code_for(status, false);
  }

  if (certify->parsed()) {
    char* report = nullptr;
    const smc_status status = smc_run_certification(
        suite.c_str(), seed < 0 ? 1u : static_cast<uint64_t>(seed), trials,
        inject_inadmissible ? 1 : 0, &report);
    print_report(report);
    if (status != SMC_OK && status != SMC_ERR_PROPERTY_FAILED) {
      report_failure(status);
    }
    if (report != nullptr && !out_dir.empty()) {
      std::ofstream out(out_dir + "/report.json");
      out << report << "\n";
    }
    smc_string_free(report);
    return exit_code_for(status, false);
  }

  // decompose
  std::string config_text;
  if (!read_file(config_path, &config_text)) {
    std::cerr << "error (config): cannot read " << config_path << "\n";
    return kExitValidation;
  }
  char* report = nullptr;
  const smc_status status = smc_run_decomposition(
      config_text.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(), seed,
      &report);
  print_report(report);
  if (status != SMC_OK && status != SMC_ERR_NOT_CERTIFIABLE) {
    report_failure(status);
  }
  smc_string_free(report);
  return exit_code_for(status, true);
}

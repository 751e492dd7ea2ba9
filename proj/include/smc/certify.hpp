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

#ifndef SMC_CERTIFY_HPP_
#define SMC_CERTIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "smc/types.hpp"

namespace smc {

// Randomized certification suites for the solver's geometric guarantees:
//   cones      — cone interiors are disjoint, surfaces are shared, and the
//                cones cover the space (no failed solves);
//   uniqueness — the exhaustive enumeration finds exactly one solution on
//                admissible instances and agrees with the solver;
//   theorem3   — constructed instances with bound-matrix two-norm >= 1
//                verifiably admit two distinct solutions;
//   lyapunov   — the closed-form decrease s^T s_dot <= -rho s^T s holds for
//                in-bound uncertainty draws.

struct CertifyOptions {
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 1000;
  // Swaps the uniqueness generator to inadmissible instances; the suite then
  // fails by design (negative control).
  bool inject_inadmissible = false;
};

struct CertifyReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  int verified_instances = 0;  // theorem3: multi-solution instances verified
  std::vector<nlohmann::json> counterexamples;  // first few kept

  bool passed() const { return failures == 0; }
  nlohmann::json to_json() const;
};

CertifyReport run_certify(const CertifyOptions& options);

}  // namespace smc

#endif  // SMC_CERTIFY_HPP_

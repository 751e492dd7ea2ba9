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

#ifndef SMC_SAMPLING_HPP_
#define SMC_SAMPLING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smc/decomposition.hpp"
#include "smc/plants/manipulator.hpp"
#include "smc/plants/spacecraft.hpp"
#include "smc/types.hpp"

namespace smc {

/// How gain uncertainty sample sets are built: every corner combination of
/// the uncertain parameters plus seeded uniform interior draws, each
/// evaluated over a grid of plant states around the operating region. The
/// continuous-box worst case is approximated, not certified; the gap is
/// recorded in the sample-set provenance.
struct SamplingSettings {
  int interior_draws = 200;
  std::uint64_t seed = 0;
  // Spacecraft gain depends on the state through the slosh angle only.
  std::vector<double> psi_grid = default_psi_grid();
  // Manipulator gain depends on the state through q1 - q2 only.
  std::vector<double> separation_grid = default_separation_grid();

  static std::vector<double> default_psi_grid();
  static std::vector<double> default_separation_grid();

  void validate() const;
};

/// Gain realizations over the spacecraft uncertainty box at scale k.
std::vector<Matrix> spacecraft_gain_samples(const SpacecraftParams& nominal,
                                            double k,
                                            const SamplingSettings& settings);

/// Gain realizations over the manipulator parameter ranges.
std::vector<Matrix> manipulator_gain_samples(const ManipulatorRanges& ranges,
                                             double g,
                                             const SamplingSettings& settings);

/// Packs gain samples into an uncertainty sample set. When g0 is null the
/// nominal gain is the element-wise median of the samples; otherwise deltas
/// are taken against the provided nominal.
UncertaintySampleSet assemble_sample_set(const std::vector<Matrix>& gains,
                                         const Matrix* g0,
                                         std::string provenance);

}  // namespace smc

#endif  // SMC_SAMPLING_HPP_

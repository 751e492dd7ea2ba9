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

#ifndef SMC_DECOMPOSITION_HPP_
#define SMC_DECOMPOSITION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "smc/controller.hpp"
#include "smc/types.hpp"

namespace smc {

/// Sampled gain-uncertainty realizations dG around a nominal G0.
struct UncertaintySampleSet {
  Matrix G0;
  std::vector<Matrix> deltas;
  std::string provenance;
};

struct PsoSettings {
  int swarm_size = 50;
  int iterations = 200;
  double inertia = 0.72;
  double cognitive = 1.49;
  double social = 1.49;
  // Half-width of the search box on the entries of M; 0 selects
  // 10 * max |G0 element|.
  double bound = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DecompositionSearchResult {
  GainDecomposition decomposition;
  double fitness = 0.0;               // two-norm of the returned F_bar
  std::vector<double> fitness_trace;  // global best after each iteration
  int evaluations = 0;
};

/// Tightest upper bound matrix certified by the sample set: the element-wise
/// maximum of |M^{-1} dG Q^{-1}| over all sampled dG. Requires M Q = G0 to
/// 1e-8 relative.
Matrix ubm_from_samples(const Matrix& M, const Matrix& Q,
                        const UncertaintySampleSet& samples);

/// Element-wise median of the gain samples (even count: mean of the two
/// middle values). Deltas for downstream use are sample - nominal.
Matrix nominal_gain(const std::vector<Matrix>& gain_samples);

/// Particle-swarm search over M (Q derived as M^{-1} G0, which enforces the
/// factorization exactly and halves the search dimension) minimizing the
/// two-norm of the certified upper bound matrix. The trivial decompositions
/// M = G0 and M = I are always evaluated, and the result is never worse than
/// the better of the two. Deterministic for a fixed seed.
DecompositionSearchResult pso_search(const UncertaintySampleSet& samples,
                                     const PsoSettings& settings);

}  // namespace smc

#endif  // SMC_DECOMPOSITION_HPP_
